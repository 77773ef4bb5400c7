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

#ifndef FRAMECAST_TOOLS_PAPER_FIXTURE_H_
#define FRAMECAST_TOOLS_PAPER_FIXTURE_H_

#include "framecast/annotation_store.h"

namespace framecast {

// A store shaped like the interview corpus: 10 episodes and 48 turn
// organization gestures (30 passing, 16 confirmation, 2 taking, 0 keeping),
// each built from a hand and a head object.
Store MakePaperFixture(const Ontology &seed);

}  // namespace framecast

#endif  // FRAMECAST_TOOLS_PAPER_FIXTURE_H_
