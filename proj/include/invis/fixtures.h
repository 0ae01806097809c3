// Copyright 2026 The Invisibility Authors
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

#ifndef INVIS_FIXTURES_H_
#define INVIS_FIXTURES_H_

#include <string>
#include <string_view>
#include <vector>

namespace invis::fixtures {

struct FixtureFile {
  std::string filename;
  std::string content;
};

// Shipped fixture names, in a stable order.
const std::vector<std::string>& names();

// Files making up the named fixture ("all" yields every fixture). Contents are
// byte-identical across runs. Throws kInvalidInput for unknown names.
std::vector<FixtureFile> files(std::string_view name);

}  // namespace invis::fixtures

#endif  // INVIS_FIXTURES_H_
