// Command-line front end: reproduces the density and ratio tables, runs the
// claim evaluators, and exports complexity/index/generating-function data.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fibdense/claims.hpp"
#include "fibdense/density.hpp"
#include "fibdense/errors.hpp"
#include "fibdense/fibword.hpp"
#include "fibdense/genfunc.hpp"
#include "fibdense/sequences.hpp"
#include "fibdense/wordstats.hpp"

namespace {

using namespace fibdense;
namespace seq = fibdense::sequences;
namespace den = fibdense::density;
namespace ws = fibdense::wordstats;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct OutputSpec {
  std::string format = "csv";
  int decimals = -1;  // per-command default when negative
  std::string out;    // empty -> stdout
};

void add_output_flags(CLI::App* cmd, OutputSpec& spec) {
  cmd->add_option("--format", spec.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "tsv"}));
  cmd->add_option("--decimals", spec.decimals, "Decimal places for rendered values")
      ->check(CLI::Range(0, 30));
  cmd->add_option("--out", spec.out, "Write to file instead of stdout");
}

unsigned long resolve_max_len(unsigned long flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("FIBDENSE_MAX_LEN"))
    return std::stoul(env);
  return fibword::kDefaultMaxLen;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void emit(const Table& t, const OutputSpec& spec, const std::string& command) {
  std::ostringstream os;
  if (spec.format == "json") {
    json meta = {{"version", kVersion},
                 {"command", command},
                 {"format", spec.format},
                 {"decimals", spec.decimals}};
    json rows = json::array();
    for (const auto& row : t.rows) {
      json r = json::object();
      for (std::size_t i = 0; i < t.header.size(); ++i) r[t.header[i]] = row[i];
      rows.push_back(r);
    }
    os << json{{"meta", meta}, {"rows", rows}}.dump(2) << "\n";
  } else {
    const char sep = spec.format == "tsv" ? '\t' : ',';
    for (std::size_t i = 0; i < t.header.size(); ++i)
      os << (i ? std::string(1, sep) : "") << t.header[i];
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? std::string(1, sep) : "") << row[i];
      os << "\n";
    }
  }
  if (spec.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(spec.out, std::ios::binary);
    f << os.str();
  }
}

int decimals_or(const OutputSpec& spec, int dflt) {
  return spec.decimals < 0 ? dflt : spec.decimals;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fibonacci-word density toolkit"};
  app.require_subcommand(1);

  // ---- word
  auto* word = app.add_subcommand("word", "Print FW(k) or its symbol counts");
  unsigned long word_k = 0;
  unsigned long max_len = fibword::kDefaultMaxLen;
  bool counts_only = false;
  word->add_option("k", word_k, "Word index")->required();
  auto* max_len_opt = word->add_option("--max-len", max_len, "Materialization cap");
  word->add_flag("--counts-only", counts_only, "Print m,n only (no materialization)");

  // ---- density-table
  auto* dtable = app.add_subcommand("density-table", "Symbol densities per k");
  unsigned long dt_kmax = 19;
  OutputSpec dt_out;
  dtable->add_option("k_max", dt_kmax, "Last row index")->required();
  add_output_flags(dtable, dt_out);

  // ---- ratios
  auto* ratios = app.add_subcommand("ratios", "Length-ratio table (L1..L7)");
  unsigned long rt_kmax = 16;
  OutputSpec rt_out;
  ratios->add_option("k_max", rt_kmax, "Last row index")->required();
  add_output_flags(ratios, rt_out);

  // ---- claims
  auto* claims_cmd = app.add_subcommand("claims", "Evaluate the paper's claims");
  std::string claim_id, claim_k, claim_lambda;
  unsigned long claim_prec = 256;
  OutputSpec cl_out;
  claims_cmd->add_option("--id", claim_id, "Claim id filter");
  claims_cmd->add_option("--k", claim_k, "k range, e.g. 2..60");
  claims_cmd->add_option("--lambda", claim_lambda, "lambda range, e.g. 0..8");
  claims_cmd->add_option("--prec", claim_prec, "Float precision in bits");
  add_output_flags(claims_cmd, cl_out);

  // ---- complexity
  auto* cpx = app.add_subcommand("complexity", "Factor/palindromic complexity profile");
  unsigned long cpx_len = 46368, cpx_nmax = 64;
  OutputSpec cpx_out;
  cpx->add_option("--length", cpx_len, "Prefix length");
  cpx->add_option("--n-max", cpx_nmax, "Largest factor length");
  add_output_flags(cpx, cpx_out);

  // ---- palindromes
  auto* pals = app.add_subcommand("palindromes", "Palindrome bound check per k");
  unsigned long pal_len = 121393, pal_kmax = 64;
  OutputSpec pal_out;
  pals->add_option("--length", pal_len, "Prefix length");
  pals->add_option("--k-max", pal_kmax, "Largest k");
  add_output_flags(pals, pal_out);

  // ---- index
  auto* idx = app.add_subcommand("index", "Sturmian index from a continued fraction");
  std::string idx_cf = "all-ones";
  unsigned long idx_depth = 30, idx_prec = 128;
  OutputSpec idx_out;
  idx->add_option("--cf", idx_cf, "Partial quotients a0,a1,... or 'all-ones'");
  idx->add_option("--depth", idx_depth, "Partial-max depth N");
  idx->add_option("--prec", idx_prec, "Float precision in bits");
  add_output_flags(idx, idx_out);

  // ---- gf
  auto* gf = app.add_subcommand("gf", "Generating-function series coefficients");
  std::string gf_which = "lemma22";
  unsigned long gf_t = 1, gf_k = 2, gf_lambda = 0, gf_terms = 16;
  OutputSpec gf_out;
  gf->add_option("--which", gf_which, "lemma22 | kfib | product")
      ->check(CLI::IsMember({"lemma22", "kfib", "product"}));
  gf->add_option("--t", gf_t, "t parameter (lemma22)");
  gf->add_option("--k", gf_k, "k parameter (lemma22, kfib)");
  gf->add_option("--lambda", gf_lambda, "lambda parameter (product)");
  gf->add_option("--terms", gf_terms, "Number of coefficients");
  add_output_flags(gf, gf_out);

  // ---- natural-density
  auto* nd = app.add_subcommand("natural-density", "Density of Fibonacci numbers in [1,x]");
  std::string nd_x = "1000000";
  OutputSpec nd_out;
  nd->add_option("x", nd_x, "Upper limit")->required();
  add_output_flags(nd, nd_out);

  // ---- figure-data
  auto* fig = app.add_subcommand("figure-data", "Normalized Binet products for plotting");
  unsigned long fig_kmax = 40, fig_lambda = 1, fig_prec = 128;
  OutputSpec fig_out;
  fig->add_option("k_max", fig_kmax, "Last k")->required();
  fig->add_option("--lambda", fig_lambda, "Offset lambda");
  fig->add_option("--prec", fig_prec, "Float precision in bits");
  add_output_flags(fig, fig_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*word) {
      const unsigned long cap = resolve_max_len(max_len, max_len_opt->count() > 0);
      if (counts_only) {
        auto [m, n] = fibword::counts(word_k);
        std::cout << "m=" << m.get_str() << " n=" << n.get_str() << "\n";
      } else {
        fibword::FibWord w = fibword::build(word_k, cap);
        std::string s;
        s.reserve(w.symbols.size() + 1);
        for (bool b : w.symbols) s += b ? '1' : '0';
        std::cout << s << "\n";
      }
    } else if (*dtable) {
      const int d = decimals_or(dt_out, 2);
      Table t{{"k", "m", "n", "DF_m", "DF_n"}, {}};
      for (const auto& r : den::density_table(dt_kmax))
        t.rows.push_back({std::to_string(r.k), r.m.get_str(), r.n.get_str(),
                          decimal_string(r.df_m, d), decimal_string(r.df_n, d)});
      emit(t, dt_out, "density-table");
    } else if (*ratios) {
      const int d = decimals_or(rt_out, 1);
      Table t{{"k", "L1", "L2", "L3", "L4", "L5", "L6", "L7"}, {}};
      for (const auto& r : den::ratio_table(rt_kmax))
        t.rows.push_back({std::to_string(r.k), decimal_string(r.l1, d),
                          decimal_string(r.l2, d), decimal_string(r.l3, d),
                          decimal_string(r.l4, d), decimal_string(r.l5, d),
                          decimal_string(r.l6, d), decimal_string(r.l7, d)});
      emit(t, rt_out, "ratios");
    } else if (*claims_cmd) {
      claims::ClaimQuery q;
      if (!claim_id.empty()) q.id = claim_id;
      auto parse_range = [](const std::string& s, std::optional<unsigned long>& lo,
                            std::optional<unsigned long>& hi) {
        if (s.empty()) return;
        auto pos = s.find("..");
        if (pos == std::string::npos) {
          lo = hi = std::stoul(s);
        } else {
          lo = std::stoul(s.substr(0, pos));
          hi = std::stoul(s.substr(pos + 2));
        }
      };
      parse_range(claim_k, q.k_lo, q.k_hi);
      parse_range(claim_lambda, q.lambda_lo, q.lambda_hi);
      q.prec = static_cast<mpfr_prec_t>(claim_prec);
      auto reports = claims::run_claims(q);
      Table t{{"id", "inputs", "exact", "rendered", "verdict", "note"}, {}};
      for (const auto& r : reports)
        t.rows.push_back({r.id, r.inputs, r.exact, r.rendered,
                          claims::to_string(r.verdict), r.note});
      emit(t, cl_out, "claims");
      if (claims::any_expected_failure(reports)) return 3;
    } else if (*cpx) {
      auto prof = ws::fibonacci_profile(cpx_len, cpx_nmax);
      Table t{{"n", "fac", "pal", "fac_stabilized", "pal_stabilized"}, {}};
      for (std::size_t n = 0; n <= cpx_nmax; ++n)
        t.rows.push_back({std::to_string(n), std::to_string(prof.fac[n]),
                          std::to_string(prof.pal[n]),
                          prof.fac_stabilized[n] ? "true" : "false",
                          prof.pal_stabilized[n] ? "true" : "false"});
      emit(t, cpx_out, "complexity");
    } else if (*pals) {
      auto prefix = fibword::InfiniteFibWord::prefix(Nat(pal_len));
      Table t{{"k", "pal", "bound", "holds"}, {}};
      for (unsigned long k = 1; k <= pal_kmax; ++k) {
        auto b = ws::palindrome_bound_check(prefix, k);
        t.rows.push_back({std::to_string(k), decimal_string(b.lhs, 0),
                          decimal_string(b.rhs, 2), b.holds ? "true" : "false"});
      }
      emit(t, pal_out, "palindromes");
    } else if (*idx) {
      ws::ContinuedFraction cf;
      if (idx_cf == "all-ones") {
        cf.partial_quotients.assign(idx_depth + 2, Nat(1));
      } else {
        std::stringstream ss(idx_cf);
        std::string tok;
        while (std::getline(ss, tok, ',')) cf.partial_quotients.emplace_back(tok);
      }
      auto si = ws::sturmian_index(cf, idx_depth, static_cast<mpfr_prec_t>(idx_prec));
      auto q = ws::convergent_denominators(cf);
      Table t{{"quantity", "value"}, {}};
      t.rows.push_back({"ind_partial", si.ind_partial.to_string(20)});
      t.rows.push_back({"ind_star_partial", si.ind_star_partial.to_string(20)});
      for (std::size_t n = 0; n < q.size(); ++n)
        t.rows.push_back({"q_" + std::to_string(n), q[n].get_str()});
      emit(t, idx_out, "index");
    } else if (*gf) {
      genfunc::RationalGF g = [&] {
        if (gf_which == "lemma22") return genfunc::lemma22_gf(Nat(gf_t), Nat(gf_k));
        if (gf_which == "kfib") return genfunc::kfib_gf(Nat(gf_k));
        return genfunc::product_fib_gf(gf_lambda);
      }();
      auto coeffs = genfunc::series_coeffs(g, gf_terms);
      Table t{{"index", "value"}, {}};
      for (std::size_t j = 0; j < coeffs.size(); ++j)
        t.rows.push_back({std::to_string(j), coeffs[j].get_str()});
      emit(t, gf_out, "gf");
    } else if (*nd) {
      Nat x(nd_x);
      Rat d = den::natural_density_fib(x);
      Table t{{"x", "count", "density_exact", "density"}, {}};
      t.rows.push_back({x.get_str(), Nat(d.get_num() * x / d.get_den()).get_str(),
                        d.get_num().get_str() + "/" + d.get_den().get_str(),
                        decimal_string(d, decimals_or(nd_out, 10))});
      emit(t, nd_out, "natural-density");
    } else if (*fig) {
      const int d = decimals_or(fig_out, 6);
      Table t{{"k", "fib_k", "fib_product", "product_norm"}, {}};
      for (unsigned long k = 1; k <= fig_kmax; ++k) {
        Nat fk = seq::fib(k);
        Nat prod = seq::fib(k) * seq::fib(k + 1);
        auto pn = den::product_norm(k, fig_lambda, static_cast<mpfr_prec_t>(fig_prec));
        t.rows.push_back({std::to_string(k), fk.get_str(), prod.get_str(),
                          pn.to_string(d)});
      }
      emit(t, fig_out, "figure-data");
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
