/*
 * Copyright 2026 The Isobenefit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "isobenefit/scene.hpp"

namespace isobenefit::cli {

/// Runs one `isobenefit` invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on a runtime error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "x0,y0,cell,ncols,nrows" -> GridSpec; errors name the --grid flag.
GridSpec parse_grid(const std::string& text);

}  // namespace isobenefit::cli
