#pragma once

#include "dseries/error.hpp"
#include "dseries/realform.hpp"

#include <doctest.h>

#include <string>

namespace testing {

/// Name of the error kind the call throws, or "none".
template <class F>
std::string thrown_kind(F&& f) {
    try {
        f();
    } catch (const dseries::Error& e) {
        return std::string(e.kind_name());
    }
    return "none";
}

inline dseries::EqualRankForm form(const std::string& type, std::vector<bool> compact) {
    return dseries::EqualRankForm::make(dseries::cartan_matrix(type), compact);
}

}  // namespace testing

namespace dseries {
inline doctest::String toString(const Weight& w) { return w.to_string().c_str(); }
}  // namespace dseries
