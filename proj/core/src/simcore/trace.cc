// Copyright 2026 The edgemarket Authors
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

#include "edgemarket/simcore/trace.h"

#include <stdexcept>

namespace edgemarket::sim {

EventTrace::EventTrace(const std::string& path)
    : out_(std::make_unique<std::ofstream>(path)) {
  if (!*out_) throw std::runtime_error("cannot open trace file " + path);
  *out_ << "step,event-kind,payload\n";
}

void EventTrace::Record(Step step, std::string_view kind,
                        std::string_view payload) {
  if (!out_) return;
  *out_ << step << ',' << kind << ',' << payload << '\n';
}

}  // namespace edgemarket::sim
