/*
   Copyright 2026 The qgha Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QGHA_QGHA_HPP
#define QGHA_QGHA_HPP

#include "algebra.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "repcore.hpp"
#include "scalars.hpp"
#include "spectra.hpp"
#include "structure.hpp"

#endif
