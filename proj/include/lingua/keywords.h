// Copyright 2026 The Lingua Authors
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

#ifndef LINGUA_KEYWORDS_H_
#define LINGUA_KEYWORDS_H_

#include <string_view>

namespace lingua {

// Every keyword of the concrete and colloquial syntax. None of these may be
// used as an identifier.
bool IsReservedWord(std::string_view word);

}  // namespace lingua

#endif  // LINGUA_KEYWORDS_H_
