// Copyright 2026 The invdel Authors
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

#ifndef INVDEL_ERROR_HPP_
#define INVDEL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace invdel {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // A size exceeded a compile-time or configured capacity.
  class CapacityError : public Error {
   public:
    using Error::Error;
  };

  // A word is not a path in the generator digraph.
  class WordTypeError : public Error {
   public:
    using Error::Error;
  };

  // No inversion/deletion sequence transforms one genome into the other.
  class NoPathError : public Error {
   public:
    using Error::Error;
  };

  class CacheIntegrityError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, size_t line)
        : Error("line " + std::to_string(line) + ": " + what), _line(line) {}

    size_t line() const noexcept {
      return _line;
    }

   private:
    size_t _line;
  };

}  // namespace invdel

#endif  // INVDEL_ERROR_HPP_
