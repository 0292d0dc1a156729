/*
   Copyright 2026 The hnlat authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HNLAT_CORE_ERROR_HPP
#define HNLAT_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hnlat {

// Stable error kinds; the C API maps these 1:1 onto status codes.
enum class ErrorKind {
    Parse,
    Validate,
    NotModular,
    NotDistributive,
    NotSublattice,
    SizeLimit,
    PrecisionExhausted,
    DegreeAxiomViolation,
    InconsistentMinima,
    BadArgument,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace hnlat

#endif
