#pragma once

#include <filesystem>
#include <string>

#include "ctc/io.hpp"
#include "ctc/report.hpp"

namespace ctc {

/// Runs the instances of a suite manifest ("kind": maschke | counterexamples |
/// local), `jobs` at a time, and merges their reports in manifest order.
Report run_suite(const std::filesystem::path& manifest, std::size_t jobs = 1);

/// maschke_2_6, local_3_1, counterexamples or all, read from <data>/suites.
Report theorem_suite(const std::string& name, const std::filesystem::path& data_dir, std::size_t jobs = 1);

/// Algebra axioms, rigidity, index, Frobenius identity and dim-with-twist.
Report algebra_report(const AlgebraObject& alg);
/// Module axioms, locality (commutative algebras) and semisimplicity.
Report module_report(const AModule& m);

}  // namespace ctc
