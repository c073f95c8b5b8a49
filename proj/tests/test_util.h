// Copyright 2026 The Singleton Lab Authors
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

#ifndef SINGLETON_LAB_TEST_UTIL_H
#define SINGLETON_LAB_TEST_UTIL_H

#include <functional>

#include "gtest/gtest.h"

#include "singleton_lab/error.h"

namespace singleton_lab::testing {

/// Error code raised by `fn`; records a failure when nothing is thrown.
inline Errc code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an exception";
    return Errc::ParseError;
}

}  // namespace singleton_lab::testing

#endif
