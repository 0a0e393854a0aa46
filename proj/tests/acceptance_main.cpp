/*
 * Copyright 2026 The spherical_mv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Runs every acceptance criterion at full size; exits nonzero if any fails.

#include <cstdio>

#include <spherical_mv/acceptance.hpp>

int main() {
    namespace acc = spherical_mv::acceptance;
    int failed = 0;
    acc::run_all(acc::Options{}, [&](const acc::Result& r) {
        std::printf("%s\n", acc::format_line(r).c_str());
        std::fflush(stdout);
        if (!r.pass) ++failed;
    });
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
