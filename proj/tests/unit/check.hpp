// Copyright 2026 The cpforce Authors
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

#pragma once

#include <cmath>

#include <doctest.h>

inline double rel_diff(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

#define CHECK_REL(x, ref, tol) CHECK_MESSAGE(rel_diff((x), (ref)) < (tol), #x " = ", (x), " ref = ", (ref))
