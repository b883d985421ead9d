// Copyright 2026 The gencqa Authors
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

#pragma once

#include <string>
#include <string_view>

namespace gencqa {

// Rule-table lemmatizer. An irregular-form exception table is consulted
// first, then suffix rules for plural -s/-es/-ies, -ing and -ed. A rule only
// fires when the remaining stem has at least three characters.
std::string lemmatize(std::string_view token);

}  // namespace gencqa
