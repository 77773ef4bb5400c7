// Copyright 2026 The Framecast Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRAMECAST_TESTS_TESTING_H_
#define FRAMECAST_TESTS_TESTING_H_

#include <random>
#include <string>
#include <vector>

#include "framecast/annotation_store.h"
#include "framecast/blend.h"
#include "framecast/classifier.h"
#include "framecast/ontology.h"

namespace framecast::testing {

std::string DataPath(const std::string &name);
std::string TestDataPath(const std::string &name);
std::string CliPath();

// A fresh scratch directory, unique per call.
std::string TempDir();

Store SeedStore();
Ontology SeedOntology();

// Feature records transcribed from the gesture descriptions.
GestureFeatures PrototypicalPassing();
GestureFeatures LateralPassing();
GestureFeatures Keeping();
GestureFeatures Taking();
GestureFeatures CircularHelp();

// Seed plus the sentence "Scotland always had its own culture" with a
// Frequency set (always.adv) and a Possession set (have.v, Owner and
// Possession labelled).
Store ScotlandSentenceStore();

// Random valid stores over the seed ontology.
Store RandomStore(std::mt19937 &rng);

// Random overlap fixture: one document, up to `max_gestures` gestures.
Store RandomOverlapStore(std::mt19937 &rng, int max_gestures);

// Brute-force overlap scan over raw keyframes, ordered by start then id.
std::vector<std::string> OracleOverlapping(const Store &store,
                                           const std::string &document,
                                           int64_t start_ms, int64_t end_ms);

// Random input spaces and injective mappings for Blend().
struct RandomBlendInputs {
  std::vector<MentalSpace> inputs;
  std::vector<CrossSpaceMapping> mappings;
};
RandomBlendInputs RandomNetworkInputs(std::mt19937 &rng);

// Independent checks of the IntegrationNetwork invariants. Return an empty
// string when the invariant holds, else a description.
std::string InjectivityViolation(const CrossSpaceMapping &mapping);
std::string OrphanViolation(const IntegrationNetwork &network);

}  // namespace framecast::testing

#endif  // FRAMECAST_TESTS_TESTING_H_
