//
// Copyright 2026 The NewsBreaker Authors
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

#ifndef NEWSBREAKER_IO_H_
#define NEWSBREAKER_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace newsbreaker {

// Both throw Error(kIo) on failure.
std::string ReadFileToString(const std::filesystem::path& path);
void WriteStringToFile(const std::filesystem::path& path, std::string_view data);

}  // namespace newsbreaker

#endif  // NEWSBREAKER_IO_H_
