#pragma once

#include <functional>

#include <nlohmann/json_fwd.hpp>

#include "zzschur/ringel.hpp"

namespace zzschur {

/// Acceptance-criterion drivers. Parameter sets default to the pinned
/// acceptance configuration; the CLI can run single instances.
VerifyReport check_heredity(int ell);
VerifyReport check_lzprime(int ell);
VerifyReport check_integrality(int n, int d, int ell);
VerifyReport check_forms(int ell);
VerifyReport check_characters(int nmax, int ellmax);
VerifyReport check_kostka(int n, int d, int ell);
VerifyReport check_dimension_identity(int n, int d, int ell);
VerifyReport check_tilting(int n, int d, int ell);
VerifyReport check_properties();

/// The ten acceptance criteria at their pinned parameter sets, in order,
/// as named thunks so drivers can time and stream them.
std::vector<std::pair<std::string, std::function<VerifyReport()>>>
acceptance_criteria(int jobs);
std::vector<VerifyReport> acceptance_suite(int jobs);

nlohmann::json report_to_json(const VerifyReport& r);
std::string report_to_text(const VerifyReport& r);

/// Optional content-addressed cache for the integral block action tables,
/// rooted at the directory named by ZZSCHUR_CACHE_DIR.
std::vector<BlockOps> load_or_build_block_ops(const ScrT& st, int n, int d,
                                              int ell);

}  // namespace zzschur
