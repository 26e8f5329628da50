// Copyright 2026 The eapm Authors
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


#ifndef EAPM_EAPM_HPP
#define EAPM_EAPM_HPP

#include "eapm/commands.hpp"
#include "eapm/gram.hpp"
#include "eapm/linalg.hpp"
#include "eapm/optimize.hpp"
#include "eapm/quantum.hpp"
#include "eapm/random.hpp"
#include "eapm/serialize.hpp"
#include "eapm/strategies.hpp"
#include "eapm/tolerances.hpp"
#include "eapm/witnesses.hpp"

#endif
