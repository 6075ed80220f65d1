// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace occsim {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace occsim
