#ifndef ORDMON_CHECKER_HPP_
#define ORDMON_CHECKER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordmon/bicyclic.hpp"
#include "ordmon/topology.hpp"

// Bounded replay of the joint continuity argument for the locally compact
// topology on B_{w+1}.
//
// A continuity check at (x, y) picks a base open set around each factor (a
// U_j around a center, the singleton around an isolated point) and asserts
// that every product of members lies in the target base set around x*y.
// Members of U_j are enumerated for t in (j, j + bound], so a passing
// check is "verified up to bound", never a proof.

namespace ordmon {

  //! Which branch of the case analysis a pair of factors falls into.
  //!
  //!  1.x    center * center, split on m1 < n, m1 = n, m1 > n;
  //!  2.a.b  isolated (a, b) * center (n w^w, m w^w), where a = 2.1 neither
  //!         coordinate is a pure multiple n' w^w (n' >= 1), 2.2 only b is,
  //!         2.3 only a is; b = 1 if m1 < n and 2 if m1 >= n, m1 being the
  //!         w^w coefficient of b;
  //!  3      center * isolated;
  //!  inversion is not a multiplication case and tags inversion reports.
  enum class CaseTag {
    c1_1,
    c1_2,
    c1_3,
    c2_1_1,
    c2_1_2,
    c2_2_1,
    c2_2_2,
    c2_3_1,
    c2_3_2,
    c3,
    inversion
  };

  std::string_view to_string(CaseTag tag);

  //! Throws DomainError if both factors are isolated (nothing to check) and
  //! ContextMismatch outside B_{w+1}.
  CaseTag classify_case(BicyclicElement const& x, BicyclicElement const& y);

  //! The multiplication under test. Swappable so that the checker can be
  //! run against deliberately broken variants.
  using Multiplier = std::function<BicyclicElement(BicyclicElement const&,
                                                   BicyclicElement const&)>;

  //! Broken multiplication for negative controls: the two branches of
  //! (a, b)(c, d) are exchanged, (a, d + (c - b)) when b <= c and
  //! (a + (b - c), d) otherwise.
  BicyclicElement swapped_branch_multiply(BicyclicElement const& x,
                                          BicyclicElement const& y);

  //! Index of a source base set; nullopt is the singleton of an isolated
  //! point.
  using SourceIndex = std::optional<std::uint64_t>;

  struct ContinuityQuery {
    BicyclicElement x;
    BicyclicElement y;
    std::uint64_t   target_k          = 0;
    std::uint64_t   enumeration_bound = 50;
  };

  //! Indices of the source sets chosen by the hand proof for a query.
  struct Recipe {
    SourceIndex j_x;
    SourceIndex j_y;

    friend bool operator==(Recipe const&, Recipe const&) = default;
  };

  //! 1.x: (k, k); 2.1.1: (singleton, r2 + t2 + k); 2.2.1: (singleton,
  //! t2 + k); 2.3.1: (singleton, r2 + k); 2.x.2: (singleton, 0); 3: the
  //! recipe of the inverted case-2 query, mirrored. t2 and r2 are the
  //! leading exponents below w^w of a and b (0 when absent).
  Recipe recipe_for(CaseTag tag, ContinuityQuery const& q);

  //! The closed-form product the hand proof states for the case.
  BicyclicElement stated_product(CaseTag tag,
                                 BicyclicElement const& x,
                                 BicyclicElement const& y);

  enum class ReportStatus { verified_up_to_bound, refuted };

  std::string_view to_string(ReportStatus s);

  //! A product that escapes the target set, or for inversion a single
  //! member whose inverse escapes.
  struct Witness {
    BicyclicElement                first;
    std::optional<BicyclicElement> second;
  };

  struct ContinuityReport {
    CaseTag                case_tag = CaseTag::c1_1;
    SourceIndex            j_x;
    SourceIndex            j_y;
    std::uint64_t          target_k = 0;
    std::uint64_t          bound    = 0;
    ReportStatus           status   = ReportStatus::verified_up_to_bound;
    std::optional<Witness> witness;

    bool verified() const noexcept {
      return status == ReportStatus::verified_up_to_bound;
    }
  };

  //! `case=<tag> j=(<jx>,<jy>) k=<k> status=<status> bound=<B>` followed by
  //! ` witness=<elem>*<elem>` on refutation.
  std::string to_string(ContinuityReport const& r);

  //! Checks the recipe's source sets against the target around the stated
  //! product: U_k of it for a center, the singleton otherwise. Case 3 is
  //! checked both through the inversion reduction and by direct
  //! enumeration; it is refuted if either route refutes.
  ContinuityReport verify_multiplication_continuity(
      ContinuityQuery const& q,
      Multiplier const&      mul = multiply);

  struct Case3Routes {
    ContinuityReport via_inversion;
    ContinuityReport direct;
  };

  //! Both routes for a case-3 query. Throws DomainError for other cases.
  Case3Routes verify_case3_routes(ContinuityQuery const& q,
                                  Multiplier const&      mul = multiply);

  //! inverse maps the center and the first \p bound members of U_k(n, m)
  //! into U_k(m, n), and vice versa.
  ContinuityReport verify_inversion_continuity(std::uint64_t k,
                                               std::uint64_t n,
                                               std::uint64_t m,
                                               std::uint64_t bound);

  //! As above for an arbitrary claimed image \p image of \p source.
  ContinuityReport verify_inversion_between(BasicNeighborhood const& source,
                                            BasicNeighborhood const& image,
                                            std::uint64_t            bound);

  //! Recipe-free search for the least j <= j_max such that
  //! U_j(x) U_j(y) lies in the target around x*y (singletons for isolated
  //! factors). The target uses the product under \p mul. On failure the
  //! report is refuted with the witness found at j_max.
  ContinuityReport refutation_search(BicyclicElement const& x,
                                     BicyclicElement const& y,
                                     std::uint64_t          target_k,
                                     std::uint64_t          j_max,
                                     std::uint64_t          bound,
                                     Multiplier const&      mul = multiply);

  ////////////////////////////////////////////////////////////////////////
  // Sweep over every case
  ////////////////////////////////////////////////////////////////////////

  struct SweepConfig {
    std::uint64_t k_max     = 6;
    std::uint64_t param_max = 4;
    std::uint64_t bound     = 50;
    std::uint64_t j_max     = 64;
    unsigned      threads   = 1;
  };

  //! Every query of the sweep, in a fixed order: case 1 with
  //! n1, m1, n, m in [1, param_max]; cases 2 and 3 with isolated points
  //! (n1 w^w + w^t2, m1 w^w + w^r2), (n1 w^w + w^t2, m1 w^w) and
  //! (n1 w^w, m1 w^w + w^r2) for n1, m1, t2, r2 in [1, param_max], against
  //! centers with n, m in [1, param_max]; k in [0, k_max] throughout.
  std::vector<ContinuityQuery> sweep_queries(SweepConfig const& config);

  struct SweepEntry {
    ContinuityQuery  query;
    CaseTag          tag;
    Recipe           recipe;
    ContinuityReport verification;
    ContinuityReport search;

    //! The index the recipe assigns to the non-singleton side.
    std::uint64_t recipe_index() const;

    //! search found a j no larger than the recipe's.
    bool recipe_dominates() const;
  };

  struct SweepResult {
    std::vector<SweepEntry>       entries;
    std::vector<ContinuityReport> inversion;

    bool all_verified() const;
  };

  //! Runs every sweep query and the inversion checks for k <= k_max,
  //! n, m <= param_max. Results do not depend on config.threads.
  SweepResult run_sweep(SweepConfig const& config,
                        Multiplier const&  mul = multiply);

  //! One report line per query, then one per inversion check.
  std::string sweep_report_text(SweepResult const& result);

  //! JSON document mirroring the report fields, with each query's factors
  //! and its search result.
  std::string sweep_report_json(SweepResult const& result,
                                SweepConfig const& config);

}  // namespace ordmon

#endif  // ORDMON_CHECKER_HPP_
