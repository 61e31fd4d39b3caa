// Copyright 2026 The neuroram Authors
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
//

#ifndef NEURORAM_ERRORS_H_
#define NEURORAM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace neuroram {

// Invalid-parameter errors are std::invalid_argument. Contract violations
// (calling an operation outside its precondition) are std::logic_error.

// A combinatorial enumeration would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A serialized document is malformed. what() starts with the JSON path of the
// offending element, e.g. "/neurons/3/bias: expected decimal string".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(path) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace neuroram

#endif  // NEURORAM_ERRORS_H_
