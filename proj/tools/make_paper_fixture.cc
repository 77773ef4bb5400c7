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

// Writes the interview-shaped fixture store.
//
//   make_paper_fixture SEED.json OUT.json

#include <iostream>

#include "framecast/interchange.h"
#include "framecast/service.h"
#include "paper_fixture.h"

int main(int argc, char **argv) {
  if (argc != 3) {
    std::cerr << "usage: make_paper_fixture SEED.json OUT.json\n";
    return 2;
  }
  try {
    const framecast::Store seed =
        framecast::ImportStore(framecast::ReadFile(argv[1]));
    framecast::WriteFileAtomically(
        argv[2], framecast::ExportStore(framecast::MakePaperFixture(seed.ontology())));
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
