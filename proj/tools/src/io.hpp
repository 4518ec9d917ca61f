// Copyright 2026 The wgvqd Authors
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

#pragma once

#include <filesystem>
#include <string>

namespace wgvqd::app {

/// Writes `content` to dir/name, creating dir if needed. Throws on I/O failure.
void write_text_file(const std::filesystem::path &dir, const std::string &name, const std::string &content);

std::string format_fixed(const char *fmt, double v);

} // namespace wgvqd::app
