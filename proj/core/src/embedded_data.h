// Copyright 2026 The Netstate Authors.
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


#ifndef NETSTATE_SRC_EMBEDDED_DATA_H_
#define NETSTATE_SRC_EMBEDDED_DATA_H_

#include <string_view>

namespace netstate::internal {

extern const std::string_view kDefaultTemplatesJson;
extern const std::string_view kDefaultKeywordsJson;

}  // namespace netstate::internal

#endif  // NETSTATE_SRC_EMBEDDED_DATA_H_
