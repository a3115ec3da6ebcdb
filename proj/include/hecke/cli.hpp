#pragma once

#include <ostream>
#include <string>

#include "hecke/cyclotomic.hpp"
#include "hecke/dirichlet.hpp"

namespace hecke::cli {

/// Exit codes of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// "trivial" or "exps=a,b,..." for a character modulo N.
DirichletCharacter parse_character(i64 N, const std::string& spec);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hecke::cli
