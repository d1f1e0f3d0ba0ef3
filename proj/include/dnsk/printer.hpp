// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <ostream>
#include <string>

#include "dnsk/syntax.hpp"

namespace dnsk {

// Concrete syntax, deterministic and minimally parenthesized. ~A is printed
// for A -> bot, t.1.2 for nested projections, S-chains as S (S 0).
std::string to_string(const Type& t);
std::string to_string(const Term& t);
std::string to_string(const Formula& a);
std::string to_string(const Proof& p);

inline std::ostream& operator<<(std::ostream& os, const Type& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }
inline std::ostream& operator<<(std::ostream& os, const Formula& a) { return os << to_string(a); }
inline std::ostream& operator<<(std::ostream& os, const Proof& p) { return os << to_string(p); }

} // namespace dnsk
