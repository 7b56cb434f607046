#pragma once

#include <string>
#include <vector>

#include "flagsphere/catalog.hpp"
#include "flagsphere/homology.hpp"
#include "flagsphere/report.hpp"

namespace flagsphere {

/// Knobs shared by every check; each maps 1:1 to a CLI flag.
struct CheckParams {
    int p = 2;                            // homology coefficient field F_p
    long long subset_budget = 2'000'000;  // equator enumeration cap
    int jobs = 1;                         // worker threads inside one check
    long long coloring_cap = 10'000'000;  // balanced-coloring backtrack cap
};

/// The check ids a scan accepts.
const std::vector<std::string>& all_check_names();
bool is_check_name(const std::string& name);

/// Certification every scan performs on a member before its checks run.
struct MemberCertificate {
    bool flag = false;
    SphereVerdict verdict = SphereVerdict::neither;
    bool certified() const { return flag && verdict == SphereVerdict::sphere; }
};

MemberCertificate certify_member(const CatalogMember& m,
                                 const CheckParams& prm);

/// Runs one named check (or "certify") on one member. Check-level problems
/// become verdicts — fail carries machine-readable witnesses, truncated
/// names the limit hit, error carries the reason — and never escape as
/// exceptions.
Report run_check(const std::string& check, const CatalogMember& m,
                 const CheckParams& prm);

/// All requested checks across the catalog: members are processed in
/// parallel (prm.jobs), per-member work stays serial, and reports come back
/// in catalog order — certification first, then the checks in the order
/// requested. Members failing certification get error reports for their
/// remaining checks; nothing throws.
std::vector<Report> scan_catalog(const Catalog& c,
                                 const std::vector<std::string>& checks,
                                 const CheckParams& prm);

}  // namespace flagsphere
