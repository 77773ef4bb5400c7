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

// Writes the built-in prototype table.
//
//   make_prototypes OUT.json

#include <iostream>

#include "framecast/classifier.h"
#include "framecast/interchange.h"
#include "framecast/service.h"

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: make_prototypes OUT.json\n";
    return 2;
  }
  try {
    framecast::WriteFileAtomically(
        argv[1], framecast::ExportPrototypes(framecast::DefaultPrototypes()));
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
