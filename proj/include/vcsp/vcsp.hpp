// Copyright 2026 The vcsp-landscape Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include "vcsp/dot.hpp"
#include "vcsp/error.hpp"
#include "vcsp/gain_tracker.hpp"
#include "vcsp/generator.hpp"
#include "vcsp/instance.hpp"
#include "vcsp/landscape.hpp"
#include "vcsp/search.hpp"
#include "vcsp/structure.hpp"
#include "vcsp/text_format.hpp"
#include "vcsp/verify.hpp"
