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


#ifndef NETSTATE_ERROR_H_
#define NETSTATE_ERROR_H_

#include <stdexcept>
#include <string>

namespace netstate {

// Root of every exception thrown by the library. Modules derive their own
// error types from it so callers can catch narrowly or broadly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad scenario file, rules file, template file or other configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace netstate

#endif  // NETSTATE_ERROR_H_
