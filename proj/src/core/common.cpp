/*
 * Copyright 2025 the oblige authors
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

#include "common.hpp"

#include <cstdio>
#include <cstdlib>

namespace oblige {

bool logEnabled()
{
    static const bool enabled = [] {
        const char* v = std::getenv("OBLIGE_LOG");
        return v != nullptr && *v != '\0' && std::string(v) != "0" && std::string(v) != "off";
    }();
    return enabled;
}

void logLine(const std::string& msg)
{
    if (logEnabled()) std::fprintf(stderr, "[oblige] %s\n", msg.c_str());
}

}  // namespace oblige
