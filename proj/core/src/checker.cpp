#include "ordmon/checker.hpp"

#include <atomic>
#include <sstream>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

#include "ordmon/error.hpp"

namespace ordmon {

  namespace {

    Ordinal omega_omega_times(std::uint64_t n) {
      if (n == 0) {
        return Ordinal();
      }
      return monomial(Ordinal::omega(), n);
    }

    BicyclicElement element(Ordinal left, Ordinal right) {
      return BicyclicElement(
          MonoidParameter::omega_plus_one(), std::move(left), std::move(right));
    }

    ContinuityQuery reduced_query(ContinuityQuery const& q) {
      return ContinuityQuery{
          inverse(q.y), inverse(q.x), q.target_k, q.enumeration_bound};
    }

    OpenBaseSet target_around(BicyclicElement const& product,
                              std::uint64_t          k) {
      if (auto const c = tau_lc_center(product)) {
        return BasicNeighborhood(c->first, c->second, k);
      }
      return product;
    }

    OpenBaseSet source_around(BicyclicElement const& x, SourceIndex const& j) {
      if (!j) {
        return x;
      }
      auto const c = tau_lc_center(x);
      if (!c) {
        throw DomainError("isolated point " + to_string(x)
                          + " has no indexed base neighbourhood");
      }
      return BasicNeighborhood(c->first, c->second, *j);
    }

    // First pair (s, u) in sx * sy, row-major, whose product escapes target.
    std::optional<Witness> find_escape(std::vector<BicyclicElement> const& sx,
                                       std::vector<BicyclicElement> const& sy,
                                       OpenBaseSet const&                  target,
                                       Multiplier const&                   mul) {
      for (auto const& s : sx) {
        for (auto const& u : sy) {
          if (!contains(target, mul(s, u))) {
            return Witness{s, u};
          }
        }
      }
      return std::nullopt;
    }

    ContinuityReport make_report(CaseTag                tag,
                                 Recipe const&          r,
                                 ContinuityQuery const& q,
                                 std::optional<Witness> w) {
      ContinuityReport out;
      out.case_tag = tag;
      out.j_x      = r.j_x;
      out.j_y      = r.j_y;
      out.target_k = q.target_k;
      out.bound    = q.enumeration_bound;
      out.status   = w ? ReportStatus::refuted : ReportStatus::verified_up_to_bound;
      out.witness  = std::move(w);
      return out;
    }

    // Direct enumeration of the recipe's source sets for any case.
    ContinuityReport verify_direct(CaseTag                tag,
                                   ContinuityQuery const& q,
                                   Multiplier const&      mul) {
      Recipe const      r      = recipe_for(tag, q);
      OpenBaseSet const target = target_around(stated_product(tag, q.x, q.y),
                                               q.target_k);
      std::size_t const prefix = q.enumeration_bound + 1;
      auto const sx = enumerate(source_around(q.x, r.j_x), prefix);
      auto const sy = enumerate(source_around(q.y, r.j_y), prefix);
      return make_report(tag, r, q, find_escape(sx, sy, target, mul));
    }

    std::string index_to_string(SourceIndex const& j) {
      return j ? std::to_string(*j) : std::string("singleton");
    }

  }  // namespace

  std::string_view to_string(CaseTag tag) {
    switch (tag) {
      case CaseTag::c1_1:
        return "1.1";
      case CaseTag::c1_2:
        return "1.2";
      case CaseTag::c1_3:
        return "1.3";
      case CaseTag::c2_1_1:
        return "2.1.1";
      case CaseTag::c2_1_2:
        return "2.1.2";
      case CaseTag::c2_2_1:
        return "2.2.1";
      case CaseTag::c2_2_2:
        return "2.2.2";
      case CaseTag::c2_3_1:
        return "2.3.1";
      case CaseTag::c2_3_2:
        return "2.3.2";
      case CaseTag::c3:
        return "3";
      case CaseTag::inversion:
        return "inv";
    }
    return "?";
  }

  std::string_view to_string(ReportStatus s) {
    return s == ReportStatus::verified_up_to_bound ? "verified_up_to_bound"
                                                   : "refuted";
  }

  CaseTag classify_case(BicyclicElement const& x, BicyclicElement const& y) {
    auto const cx = tau_lc_center(x);
    auto const cy = tau_lc_center(y);
    if (cx && cy) {
      std::uint64_t const m1 = cx->second;
      std::uint64_t const n  = cy->first;
      return m1 < n ? CaseTag::c1_1 : (m1 == n ? CaseTag::c1_2 : CaseTag::c1_3);
    }
    if (!cx && cy) {
      bool const a_pure = omega_omega_multiple(x.left()).has_value();
      bool const b_pure = omega_omega_multiple(x.right()).has_value();
      bool const first  = split_at_omega_omega(x.right()).head < cy->first;
      if (!a_pure && !b_pure) {
        return first ? CaseTag::c2_1_1 : CaseTag::c2_1_2;
      }
      if (!a_pure) {
        return first ? CaseTag::c2_2_1 : CaseTag::c2_2_2;
      }
      return first ? CaseTag::c2_3_1 : CaseTag::c2_3_2;
    }
    if (cx && !cy) {
      return CaseTag::c3;
    }
    throw DomainError("both factors " + to_string(x) + " and " + to_string(y)
                      + " are isolated; continuity there is trivial");
  }

  BicyclicElement swapped_branch_multiply(BicyclicElement const& x,
                                          BicyclicElement const& y) {
    if (!(x.context() == y.context())) {
      throw ContextMismatch("cannot combine elements of different monoids");
    }
    Ordinal const& a = x.left();
    Ordinal const& b = x.right();
    Ordinal const& c = y.left();
    Ordinal const& d = y.right();
    if (b <= c) {
      return BicyclicElement(x.context(), a, d + (c - b));
    }
    return BicyclicElement(x.context(), a + (b - c), d);
  }

  Recipe recipe_for(CaseTag tag, ContinuityQuery const& q) {
    std::uint64_t const k = q.target_k;
    switch (tag) {
      case CaseTag::c1_1:
      case CaseTag::c1_2:
      case CaseTag::c1_3:
        return {k, k};
      case CaseTag::c2_1_1:
        return {std::nullopt,
                tail_leading_exponent(q.x.right())
                    + tail_leading_exponent(q.x.left()) + k};
      case CaseTag::c2_2_1:
        return {std::nullopt, tail_leading_exponent(q.x.left()) + k};
      case CaseTag::c2_3_1:
        return {std::nullopt, tail_leading_exponent(q.x.right()) + k};
      case CaseTag::c2_1_2:
      case CaseTag::c2_2_2:
      case CaseTag::c2_3_2:
        return {std::nullopt, 0};
      case CaseTag::c3: {
        ContinuityQuery const r = reduced_query(q);
        Recipe const          mirrored = recipe_for(classify_case(r.x, r.y), r);
        return {mirrored.j_y, mirrored.j_x};
      }
      case CaseTag::inversion:
        break;
    }
    throw DomainError("inversion checks have no multiplication recipe");
  }

  BicyclicElement stated_product(CaseTag                tag,
                                 BicyclicElement const& x,
                                 BicyclicElement const& y) {
    if (tag == CaseTag::c3) {
      BicyclicElement const rx = inverse(y);
      BicyclicElement const ry = inverse(x);
      return inverse(stated_product(classify_case(rx, ry), rx, ry));
    }
    if (tag == CaseTag::inversion) {
      throw DomainError("inversion checks have no product");
    }
    auto const cy = tau_lc_center(y);
    if (!cy) {
      throw DomainError("right factor must be a center in cases 1 and 2");
    }
    auto const [n, m] = *cy;
    auto const a      = split_at_omega_omega(x.left());
    auto const b      = split_at_omega_omega(x.right());
    std::uint64_t const n1 = a.head;
    std::uint64_t const m1 = b.head;
    switch (tag) {
      case CaseTag::c1_1:
      case CaseTag::c2_1_1:
      case CaseTag::c2_2_1:
      case CaseTag::c2_3_1:
        return element(omega_omega_times(n1 + n - m1), omega_omega_times(m));
      case CaseTag::c1_2:
        return element(omega_omega_times(n1), omega_omega_times(m));
      case CaseTag::c1_3:
        return element(omega_omega_times(n1), omega_omega_times(m + m1 - n));
      case CaseTag::c2_1_2:
      case CaseTag::c2_2_2:
      case CaseTag::c2_3_2:
        return element(x.left(), omega_omega_times(m + m1 - n) + b.tail);
      default:
        break;
    }
    throw DomainError("unreachable case tag");
  }

  std::string to_string(ContinuityReport const& r) {
    std::ostringstream os;
    os << "case=" << to_string(r.case_tag) << " j=(" << index_to_string(r.j_x)
       << "," << index_to_string(r.j_y) << ") k=" << r.target_k
       << " status=" << to_string(r.status) << " bound=" << r.bound;
    if (r.witness) {
      os << " witness=" << r.witness->first;
      if (r.witness->second) {
        os << "*" << *r.witness->second;
      }
    }
    return os.str();
  }

  Case3Routes verify_case3_routes(ContinuityQuery const& q,
                                  Multiplier const&      mul) {
    if (classify_case(q.x, q.y) != CaseTag::c3) {
      throw DomainError("not a case 3 query");
    }
    ContinuityQuery const  r    = reduced_query(q);
    ContinuityReport const half = verify_direct(classify_case(r.x, r.y), r, mul);

    ContinuityReport via = half;
    via.case_tag         = CaseTag::c3;
    via.j_x              = half.j_y;
    via.j_y              = half.j_x;
    if (half.witness) {
      // (s, u) escaping for y^-1 x^-1 corresponds to (u^-1, s^-1) for x y.
      via.witness = Witness{inverse(*half.witness->second),
                            inverse(half.witness->first)};
    }
    return {std::move(via), verify_direct(CaseTag::c3, q, mul)};
  }

  ContinuityReport verify_multiplication_continuity(ContinuityQuery const& q,
                                                    Multiplier const&      mul) {
    CaseTag const tag = classify_case(q.x, q.y);
    if (tag != CaseTag::c3) {
      return verify_direct(tag, q, mul);
    }
    Case3Routes routes = verify_case3_routes(q, mul);
    if (!routes.direct.verified()) {
      return std::move(routes.direct);
    }
    if (!routes.via_inversion.verified()) {
      return std::move(routes.via_inversion);
    }
    return std::move(routes.direct);
  }

  ContinuityReport verify_inversion_between(BasicNeighborhood const& source,
                                            BasicNeighborhood const& image,
                                            std::uint64_t            bound) {
    ContinuityReport out;
    out.case_tag = CaseTag::inversion;
    out.j_x      = source.k();
    out.j_y      = image.k();
    out.target_k = image.k();
    out.bound    = bound;
    auto check   = [&](BasicNeighborhood const& from, BasicNeighborhood const& to) {
      for (auto const& e : nbhd_enumerate(from, bound + 1)) {
        if (!nbhd_member(inverse(e), to)) {
          out.status  = ReportStatus::refuted;
          out.witness = Witness{e, std::nullopt};
          return false;
        }
      }
      return true;
    };
    if (check(source, image)) {
      check(image, source);
    }
    return out;
  }

  ContinuityReport verify_inversion_continuity(std::uint64_t k,
                                               std::uint64_t n,
                                               std::uint64_t m,
                                               std::uint64_t bound) {
    BasicNeighborhood const U(n, m, k);
    return verify_inversion_between(U, inv_nbhd(U), bound);
  }

  ContinuityReport refutation_search(BicyclicElement const& x,
                                     BicyclicElement const& y,
                                     std::uint64_t          target_k,
                                     std::uint64_t          j_max,
                                     std::uint64_t          bound,
                                     Multiplier const&      mul) {
    CaseTag const     tag    = classify_case(x, y);
    OpenBaseSet const target = target_around(mul(x, y), target_k);
    bool const        x_iso  = is_isolated_tau_lc(x);
    bool const        y_iso  = is_isolated_tau_lc(y);
    ContinuityQuery const q{x, y, target_k, bound};

    std::optional<Witness> last;
    Recipe                 at;
    for (std::uint64_t j = 0; j <= j_max; ++j) {
      at = Recipe{x_iso ? SourceIndex() : SourceIndex(j),
                  y_iso ? SourceIndex() : SourceIndex(j)};
      auto const sx = enumerate(source_around(x, at.j_x), bound + 1);
      auto const sy = enumerate(source_around(y, at.j_y), bound + 1);
      last          = find_escape(sx, sy, target, mul);
      if (!last) {
        break;
      }
    }
    return make_report(tag, at, q, std::move(last));
  }

  ////////////////////////////////////////////////////////////////////////
  // Sweep
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t SweepEntry::recipe_index() const {
    return recipe.j_x ? *recipe.j_x : *recipe.j_y;
  }

  bool SweepEntry::recipe_dominates() const {
    if (!search.verified()) {
      return false;
    }
    std::uint64_t const found = search.j_x ? *search.j_x : *search.j_y;
    return found <= recipe_index();
  }

  bool SweepResult::all_verified() const {
    for (auto const& e : entries) {
      if (!e.verification.verified() || !e.recipe_dominates()) {
        return false;
      }
    }
    for (auto const& r : inversion) {
      if (!r.verified()) {
        return false;
      }
    }
    return true;
  }

  std::vector<ContinuityQuery> sweep_queries(SweepConfig const& config) {
    std::uint64_t const P = config.param_max;
    std::uint64_t const B = config.bound;
    std::vector<ContinuityQuery> out;

    auto center = [](std::uint64_t n, std::uint64_t m) {
      return element(omega_omega_times(n), omega_omega_times(m));
    };

    for (std::uint64_t k = 0; k <= config.k_max; ++k) {
      for (std::uint64_t n1 = 1; n1 <= P; ++n1) {
        for (std::uint64_t m1 = 1; m1 <= P; ++m1) {
          for (std::uint64_t n = 1; n <= P; ++n) {
            for (std::uint64_t m = 1; m <= P; ++m) {
              out.push_back({center(n1, m1), center(n, m), k, B});
            }
          }
        }
      }
    }

    std::vector<BicyclicElement> isolated;
    for (std::uint64_t n1 = 1; n1 <= P; ++n1) {
      for (std::uint64_t m1 = 1; m1 <= P; ++m1) {
        for (std::uint64_t t2 = 1; t2 <= P; ++t2) {
          for (std::uint64_t r2 = 1; r2 <= P; ++r2) {
            isolated.push_back(element(omega_omega_plus_power(n1, t2),
                                       omega_omega_plus_power(m1, r2)));
          }
          isolated.push_back(element(omega_omega_plus_power(n1, t2),
                                     omega_omega_times(m1)));
          isolated.push_back(element(omega_omega_times(n1),
                                     omega_omega_plus_power(m1, t2)));
        }
      }
    }

    for (std::uint64_t k = 0; k <= config.k_max; ++k) {
      for (auto const& p : isolated) {
        for (std::uint64_t n = 1; n <= P; ++n) {
          for (std::uint64_t m = 1; m <= P; ++m) {
            out.push_back({p, center(n, m), k, B});
          }
        }
      }
    }
    for (std::uint64_t k = 0; k <= config.k_max; ++k) {
      for (std::uint64_t n = 1; n <= P; ++n) {
        for (std::uint64_t m = 1; m <= P; ++m) {
          for (auto const& p : isolated) {
            out.push_back({center(n, m), p, k, B});
          }
        }
      }
    }
    return out;
  }

  SweepResult run_sweep(SweepConfig const& config, Multiplier const& mul) {
    std::vector<ContinuityQuery> const queries = sweep_queries(config);
    std::vector<std::optional<SweepEntry>> slots(queries.size());

    auto evaluate = [&](std::size_t i) {
      ContinuityQuery const& q   = queries[i];
      CaseTag const          tag = classify_case(q.x, q.y);
      slots[i].emplace(SweepEntry{
          q,
          tag,
          recipe_for(tag, q),
          verify_multiplication_continuity(q, mul),
          refutation_search(
              q.x, q.y, q.target_k, config.j_max, q.enumeration_bound, mul)});
    };

    unsigned const workers = std::max(1u, config.threads);
    if (workers == 1) {
      for (std::size_t i = 0; i < queries.size(); ++i) {
        evaluate(i);
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < queries.size(); i = next++) {
            evaluate(i);
          }
        });
      }
    }

    SweepResult result;
    result.entries.reserve(slots.size());
    for (auto& s : slots) {
      result.entries.push_back(std::move(*s));
    }
    for (std::uint64_t k = 0; k <= config.k_max; ++k) {
      for (std::uint64_t n = 1; n <= config.param_max; ++n) {
        for (std::uint64_t m = 1; m <= config.param_max; ++m) {
          result.inversion.push_back(
              verify_inversion_continuity(k, n, m, config.bound));
        }
      }
    }
    return result;
  }

  std::string sweep_report_text(SweepResult const& result) {
    std::string out;
    for (auto const& e : result.entries) {
      out += to_string(e.verification);
      out += '\n';
    }
    for (auto const& r : result.inversion) {
      out += to_string(r);
      out += '\n';
    }
    return out;
  }

  namespace {
    nlohmann::json index_json(SourceIndex const& j) {
      if (!j) {
        return "singleton";
      }
      return *j;
    }

    nlohmann::json report_json(ContinuityReport const& r) {
      nlohmann::json j = {{"case", std::string(to_string(r.case_tag))},
                          {"j_x", index_json(r.j_x)},
                          {"j_y", index_json(r.j_y)},
                          {"k", r.target_k},
                          {"status", std::string(to_string(r.status))},
                          {"bound", r.bound}};
      if (r.witness) {
        nlohmann::json w = nlohmann::json::array();
        w.push_back(to_string(r.witness->first));
        if (r.witness->second) {
          w.push_back(to_string(*r.witness->second));
        }
        j["witness"] = std::move(w);
      }
      return j;
    }
  }  // namespace

  std::string sweep_report_json(SweepResult const& result,
                                SweepConfig const& config) {
    nlohmann::json queries = nlohmann::json::array();
    for (auto const& e : result.entries) {
      nlohmann::json q   = report_json(e.verification);
      q["x"]             = to_string(e.query.x);
      q["y"]             = to_string(e.query.y);
      q["recipe_index"]  = e.recipe_index();
      q["search"]        = report_json(e.search);
      q["recipe_dominated"] = e.recipe_dominates();
      queries.push_back(std::move(q));
    }
    nlohmann::json inversion = nlohmann::json::array();
    for (auto const& r : result.inversion) {
      inversion.push_back(report_json(r));
    }
    nlohmann::json doc = {{"config",
                           {{"k_max", config.k_max},
                            {"param_max", config.param_max},
                            {"bound", config.bound},
                            {"j_max", config.j_max}}},
                          {"all_verified", result.all_verified()},
                          {"queries", std::move(queries)},
                          {"inversion", std::move(inversion)}};
    return doc.dump(2) + "\n";
  }

}  // namespace ordmon
