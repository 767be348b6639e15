// Copyright 2026 The pmpspec Authors.
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

#include "pmp/error.h"

namespace pmp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kPreconditionFailed:
      return "precondition_failed";
    case ErrorCode::kMalformedInput:
      return "malformed_edge_list";
    case ErrorCode::kCapExceeded:
      return "cap_exceeded";
    case ErrorCode::kSearchExhausted:
      return "search_exhausted";
  }
  return "unknown";
}

}  // namespace pmp
