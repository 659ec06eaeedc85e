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

#ifndef EDGEMARKET_SIMCORE_TRACE_H_
#define EDGEMARKET_SIMCORE_TRACE_H_

#include <fstream>
#include <memory>
#include <string>
#include <string_view>

#include "edgemarket/simcore/clock.h"

namespace edgemarket::sim {

// Optional line-oriented event dump: "step,event-kind,payload".
class EventTrace {
 public:
  EventTrace() = default;
  explicit EventTrace(const std::string& path);

  bool enabled() const { return out_ != nullptr; }
  void Record(Step step, std::string_view kind, std::string_view payload);

 private:
  std::unique_ptr<std::ofstream> out_;
};

}  // namespace edgemarket::sim

#endif  // EDGEMARKET_SIMCORE_TRACE_H_
