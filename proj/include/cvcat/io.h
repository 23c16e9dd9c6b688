// Copyright 2026 The cvcat Authors
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


#ifndef CVCAT_IO_H
#define CVCAT_IO_H

#include <string>

namespace cvcat {

/// Shortest-safe round-trip text for a double ("%.17g"), so written files
/// are byte-identical across runs.
std::string format_real(double value);

/// Writes `contents` to `path`, or to stdout when path is empty or "-".
/// Throws DomainError if the file cannot be opened.
void write_text(const std::string &path, const std::string &contents);

}  // namespace cvcat

#endif
