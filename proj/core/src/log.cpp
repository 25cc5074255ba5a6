// Copyright 2026 The covobs Authors
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


#include "covobs/log.hpp"

#include <mutex>
#include <string>

namespace covobs {
namespace {

std::mutex &sink_mutex() {
    static std::mutex m;
    return m;
}

LogSink &sink() {
    static LogSink s;
    return s;
}

} // namespace

void set_log_sink(LogSink new_sink) {
    const std::lock_guard lock(sink_mutex());
    sink() = std::move(new_sink);
}

void log_note(std::string_view message) {
    const std::lock_guard lock(sink_mutex());
    if (sink()) {
        sink()(message);
    }
}

} // namespace covobs
