// Copyright 2026 The iaclint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IACLINT_ANSIBLE_PARSER_H_
#define IACLINT_ANSIBLE_PARSER_H_

#include <string>
#include <string_view>

#include "iaclint/token_stream.h"

namespace YAML {
class Node;
}  // namespace YAML

namespace iaclint {

// Tokenizes an Ansible YAML file into COMMENT and KEY tokens.
//
// Comments are found by scanning lines (a '#' that starts the line or follows
// whitespace, outside quoted scalars and block scalars). Every document is
// then walked depth first; each mapping entry whose value is a scalar or null
// becomes a KEY token named after its leaf key, with the ancestor keys in
// key_path. Sequences do not add path segments. Each mapping that is a
// sequence element (an Ansible task, a play) opens a new block.
TokenStream ParseAnsible(std::string_view source, std::string script);

// Text form of a scalar node. Plain YAML 1.1 booleans (yes/no/on/off/...)
// become "true"/"false", null becomes "", everything else is returned as
// written without quotes.
std::string RenderScalar(const YAML::Node& node);

}  // namespace iaclint

#endif  // IACLINT_ANSIBLE_PARSER_H_
