// qpart: command-line front end over the C interface.

#include "qpart/qpart.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using Json = nlohmann::ordered_json;

namespace {

// Carries a library status out of a command.
struct Failure : std::runtime_error {
  qpart_status status;
  Failure(qpart_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(qpart_status s) {
  if (s != QPART_OK) throw Failure(s, qpart_last_error());
}

struct QpolyDeleter {
  void operator()(qpart_qpoly* q) const { qpart_qpoly_free(q); }
};
using Qpoly = std::unique_ptr<qpart_qpoly, QpolyDeleter>;

struct StringDeleter {
  void operator()(char* s) const { qpart_string_free(s); }
};

std::string take(char* s) {
  std::unique_ptr<char, StringDeleter> owner(s);
  return s ? std::string(s) : std::string();
}

Qpoly parse_qpoly(const std::string& text) {
  qpart_qpoly* q = nullptr;
  check(qpart_qpoly_parse(text.c_str(), &q));
  return Qpoly(q);
}

Json qpoly_json(const qpart_qpoly* q) {
  char* s = nullptr;
  check(qpart_qpoly_to_json(q, &s));
  return Json::parse(take(s));
}

std::string qpoly_text(const qpart_qpoly* q) {
  char* s = nullptr;
  check(qpart_qpoly_to_text(q, &s));
  return take(s);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

// Splits on commas outside brackets, braces, parentheses and quotes, so a
// list may hold JSON quasi-polynomials.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  bool quoted = false;
  for (char c : s) {
    if (quoted) {
      if (c == '"') quoted = false;
    } else if (c == '"') {
      quoted = true;
    } else if (c == '[' || c == '{' || c == '(') {
      ++depth;
    } else if (c == ']' || c == '}' || c == ')') {
      --depth;
    } else if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (depth != 0 || quoted) throw Failure(QPART_ERR_PARSE, "unbalanced list '" + s + "'");
  out.push_back(trim(cur));
  for (const auto& item : out)
    if (item.empty()) throw Failure(QPART_ERR_PARSE, "empty entry in list '" + s + "'");
  return out;
}

// Options may repeat and each occurrence may itself be a comma list.
std::vector<std::string> flatten(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw)
    for (auto& item : split_top_level(r)) out.push_back(std::move(item));
  return out;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

std::vector<const qpart_qpoly*> raw_handles(const std::vector<Qpoly>& v) {
  std::vector<const qpart_qpoly*> out;
  for (const auto& q : v) out.push_back(q.get());
  return out;
}

enum class Format { json, text };

struct Output {
  Format format = Format::json;

  void emit(const Json& j, const std::string& text) const {
    if (format == Format::json) {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << text << "\n";
    }
  }
};

// --- count, count-symbolic -------------------------------------------------

struct CountArgs {
  std::vector<std::string> coeffs;
  std::string target;
  std::string method = "fast";
};

void run_count(const CountArgs& a, const Output& out) {
  auto coeffs = flatten(a.coeffs);
  if (coeffs.size() < 2 || coeffs.size() > 3)
    throw Failure(QPART_ERR_PARSE, "count takes 2 or 3 coefficients");
  qpart_count_method m = a.method == "brute"   ? QPART_COUNT_BRUTE
                         : a.method == "via-sum" ? QPART_COUNT_VIA_SUM
                                                 : QPART_COUNT_FAST;
  auto cs = c_strings(coeffs);
  char* s = nullptr;
  check(qpart_count(cs.data(), cs.size(), a.target.c_str(), m, &s));
  std::string value = take(s);
  out.emit(Json{{"count", value}}, value);
}

void run_count_symbolic(const CountArgs& a, const Output& out) {
  auto coeffs = flatten(a.coeffs);
  if (coeffs.size() < 2 || coeffs.size() > 3)
    throw Failure(QPART_ERR_PARSE, "count-symbolic takes 2 or 3 coefficients");
  std::vector<Qpoly> qs;
  for (const auto& c : coeffs) qs.push_back(parse_qpoly(c));
  Qpoly target = parse_qpoly(a.target);
  auto hs = raw_handles(qs);
  qpart_qpoly* r = nullptr;
  check(qpart_count_symbolic(hs.data(), hs.size(), target.get(), &r));
  Qpoly result(r);
  out.emit(Json{{"count", qpoly_json(result.get())}}, qpoly_text(result.get()));
}

// --- fracsum ----------------------------------------------------------------

struct FracsumArgs {
  std::vector<std::string> r;
  std::string method = "fast";
  bool symbolic = false;
};

qpart_sum_method sum_method(const std::string& name) {
  if (name == "brute") return QPART_SUM_BRUTE;
  if (name == "lemma") return QPART_SUM_LEMMA;
  return QPART_SUM_FAST;
}

void run_fracsum(const FracsumArgs& a, const Output& out) {
  auto r = flatten(a.r);
  if (r.size() != 5) throw Failure(QPART_ERR_PARSE, "fracsum takes exactly five values r1..r5");
  if (a.symbolic) {
    std::vector<Qpoly> qs;
    for (const auto& x : r) qs.push_back(parse_qpoly(x));
    auto hs = raw_handles(qs);
    qpart_qpoly* s = nullptr;
    check(qpart_fracsum_symbolic(hs.data(), &s));
    Qpoly result(s);
    out.emit(Json{{"sum", qpoly_json(result.get())}}, qpoly_text(result.get()));
    return;
  }
  auto rs = c_strings(r);
  char* s = nullptr;
  check(qpart_fracsum(rs.data(), sum_method(a.method), &s));
  std::string value = take(s);
  out.emit(Json{{"sum", value}}, value);
}

// --- quasi-polynomial commands ------------------------------------------------

void run_div(const std::string& f, const std::string& g, const Output& out) {
  Qpoly fq = parse_qpoly(f), gq = parse_qpoly(g);
  qpart_qpoly *q = nullptr, *r = nullptr;
  check(qpart_qpoly_div(fq.get(), gq.get(), &q, &r));
  Qpoly quotient(q), remainder(r);
  out.emit(Json{{"quotient", qpoly_json(quotient.get())}, {"remainder", qpoly_json(remainder.get())}},
           "quotient: " + qpoly_text(quotient.get()) + "\nremainder: " + qpoly_text(remainder.get()));
}

void run_gcd(const std::vector<std::string>& raw, bool with_bezout, const Output& out) {
  auto fs = flatten(raw);
  std::vector<Qpoly> qs;
  for (const auto& f : fs) qs.push_back(parse_qpoly(f));
  auto hs = raw_handles(qs);
  if (!with_bezout) {
    qpart_qpoly* g = nullptr;
    check(qpart_qpoly_gcd(hs.data(), hs.size(), &g));
    Qpoly gcd(g);
    out.emit(Json{{"gcd", qpoly_json(gcd.get())}}, qpoly_text(gcd.get()));
    return;
  }
  std::vector<qpart_qpoly*> us(hs.size(), nullptr);
  qpart_qpoly* g = nullptr;
  check(qpart_qpoly_bezout(hs.data(), hs.size(), &g, us.data()));
  Qpoly gcd(g);
  std::vector<Qpoly> coeffs;
  for (auto* u : us) coeffs.emplace_back(u);
  Json j{{"gcd", qpoly_json(gcd.get())}, {"coefficients", Json::array()}};
  std::string text = "gcd: " + qpoly_text(gcd.get());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    j["coefficients"].push_back(qpoly_json(coeffs[k].get()));
    text += "\nu" + std::to_string(k + 1) + ": " + qpoly_text(coeffs[k].get());
  }
  out.emit(j, text);
}

void run_inverse(const std::string& a, const std::string& b, const Output& out) {
  Qpoly aq = parse_qpoly(a), bq = parse_qpoly(b);
  qpart_qpoly* u = nullptr;
  check(qpart_qpoly_inverse(aq.get(), bq.get(), &u));
  Qpoly inv(u);
  out.emit(Json{{"inverse", qpoly_json(inv.get())}}, qpoly_text(inv.get()));
}

void run_eval(const std::string& f, const std::vector<std::string>& raw_n, const Output& out) {
  Qpoly q = parse_qpoly(f);
  auto ns = flatten(raw_n);
  Json values = Json::array();
  std::string text;
  for (const auto& n : ns) {
    char* s = nullptr;
    check(qpart_qpoly_eval(q.get(), n.c_str(), &s));
    std::string v = take(s);
    values.push_back(v);
    if (!text.empty()) text += "\n";
    text += v;
  }
  if (ns.size() == 1) {
    out.emit(Json{{"value", values[0]}}, text);
  } else {
    out.emit(Json{{"values", values}}, text);
  }
}

// --- bench --------------------------------------------------------------------

struct BenchArgs {
  std::string kind = "fracsum";
  std::string methods = "fast,brute";
  std::vector<std::string> sizes;
  std::string coeffs = "101,103,107";
  int reps = 5;
  std::string brute_cutoff = "10000000";
  std::string timings;
};

struct BenchRow {
  std::string method, size;
  bool skipped = false;
  std::string value;
  std::optional<std::size_t> steps;
  double median_seconds = 0;
};

std::vector<std::string> split_plain(const std::string& s) {
  if (trim(s).empty()) return {};
  return split_top_level(s);
}

// Decimal text of a size given as an integer or as 1eK.
std::string expand_size(const std::string& s) {
  auto e = s.find_first_of("eE");
  if (e == std::string::npos) return s;
  std::string mant = s.substr(0, e);
  int exp = std::stoi(s.substr(e + 1));
  if (exp < 0 || mant.empty() || mant.find_first_not_of("0123456789") != std::string::npos)
    throw Failure(QPART_ERR_PARSE, "bad size '" + s + "'");
  return mant + std::string(static_cast<std::size_t>(exp), '0');
}

bool exceeds(const std::string& a, const std::string& b) {
  // Both are nonnegative decimal strings without leading zeros.
  if (a.size() != b.size()) return a.size() > b.size();
  return a > b;
}

// Golden-ratio multiplier gives the longest Euclid chains for a modulus.
std::string golden_multiplier(const std::string& r5) {
  Qpoly scaled = parse_qpoly("61803398875*n");
  char* s = nullptr;
  check(qpart_qpoly_eval(scaled.get(), r5.c_str(), &s));
  std::string prod = take(s);
  return prod.size() > 11 ? prod.substr(0, prod.size() - 11) : "1";
}

template <class Fn>
double median_seconds(int reps, Fn&& fn) {
  std::vector<double> t;
  for (int k = 0; k < reps; ++k) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

BenchRow bench_fracsum(const std::string& method, const std::string& size, int reps,
                       const std::string& cutoff) {
  BenchRow row;
  row.method = method;
  row.size = size;
  // Window [0, r5] so brute force does r5 + 1 terms.
  std::vector<std::string> r{"0", size, "7", golden_multiplier(size), size};
  // The lemma walks every quotient block, also linear in r5.
  if ((method == "brute" || method == "lemma") && exceeds(size, cutoff)) {
    row.skipped = true;
    return row;
  }
  auto rs = c_strings(r);
  qpart_sum_method m = sum_method(method);
  row.median_seconds = median_seconds(reps, [&] {
    char* s = nullptr;
    check(qpart_fracsum(rs.data(), m, &s));
    row.value = take(s);
  });
  if (method == "fast") {
    std::size_t levels = 0;
    check(qpart_fracsum_chain_length(rs.data(), &levels));
    row.steps = levels;
  }
  return row;
}

BenchRow bench_count3(const std::string& method, const std::string& size, int reps,
                      const std::string& coeffs, const std::string& cutoff) {
  BenchRow row;
  row.method = method;
  row.size = size;
  if (method == "brute" && exceeds(size, cutoff)) {
    row.skipped = true;
    return row;
  }
  auto cs = split_top_level(coeffs);
  if (cs.size() != 3) throw Failure(QPART_ERR_PARSE, "count3 bench takes 3 coefficients");
  auto ptrs = c_strings(cs);
  qpart_count_method m = method == "brute"   ? QPART_COUNT_BRUTE
                         : method == "via-sum" ? QPART_COUNT_VIA_SUM
                                               : QPART_COUNT_FAST;
  row.median_seconds = median_seconds(reps, [&] {
    char* s = nullptr;
    check(qpart_count(ptrs.data(), ptrs.size(), size.c_str(), m, &s));
    row.value = take(s);
  });
  return row;
}

void run_bench(const BenchArgs& a, const Output& out) {
  if (a.kind != "fracsum" && a.kind != "count3")
    throw Failure(QPART_ERR_PARSE, "bench kind must be fracsum or count3");
  if (a.reps < 1) throw Failure(QPART_ERR_PARSE, "--reps must be positive");
  const std::vector<std::string> allowed =
      a.kind == "fracsum" ? std::vector<std::string>{"fast", "brute", "lemma"}
                          : std::vector<std::string>{"fast", "brute", "via-sum"};
  auto methods = split_plain(a.methods);
  for (const auto& m : methods)
    if (std::find(allowed.begin(), allowed.end(), m) == allowed.end())
      throw Failure(QPART_ERR_PARSE, "unknown method '" + m + "' for " + a.kind);
  std::vector<std::string> sizes;
  for (const auto& s : flatten(a.sizes.empty() ? std::vector<std::string>{
                                                     a.kind == "fracsum" ? "1e3,1e6,1e9,1e12"
                                                                         : "1e3,1e4,1e5,1e6"}
                                               : a.sizes))
    sizes.push_back(expand_size(s));
  const std::string cutoff = expand_size(a.brute_cutoff);

  std::vector<BenchRow> rows;
  for (const auto& size : sizes) {
    for (const auto& m : methods) {
      rows.push_back(a.kind == "fracsum" ? bench_fracsum(m, size, a.reps, cutoff)
                                         : bench_count3(m, size, a.reps, a.coeffs, cutoff));
    }
    // Every method that ran must agree.
    std::optional<std::string> agreed;
    for (auto it = rows.end() - static_cast<long>(methods.size()); it != rows.end(); ++it) {
      if (it->skipped) continue;
      if (agreed && *agreed != it->value)
        throw Failure(QPART_ERR_INTERNAL, "methods disagree at size " + size);
      agreed = it->value;
    }
  }

  Json results = Json::array();
  std::string csv = "method,size,status,value,steps";
  Json timing = Json::array();
  std::string timing_csv = "method,size,median_seconds,speedup_vs_brute";
  for (const auto& row : rows) {
    Json r{{"method", row.method}, {"size", row.size}};
    if (row.skipped) {
      r["status"] = "skipped";
    } else {
      r["status"] = "ok";
      r["value"] = row.value;
      if (row.steps) r["steps"] = std::to_string(*row.steps);
    }
    results.push_back(r);
    csv += "\n" + row.method + "," + row.size + "," + (row.skipped ? "skipped" : "ok") + "," +
           row.value + "," + (row.steps ? std::to_string(*row.steps) : "");

    if (row.skipped) continue;
    std::optional<double> speedup;
    for (const auto& other : rows)
      if (other.method == "brute" && other.size == row.size && !other.skipped &&
          row.median_seconds > 0)
        speedup = other.median_seconds / row.median_seconds;
    Json t{{"method", row.method}, {"size", row.size}, {"median_seconds", row.median_seconds}};
    if (speedup) t["speedup_vs_brute"] = *speedup;
    timing.push_back(t);
    timing_csv += "\n" + row.method + "," + row.size + "," + std::to_string(row.median_seconds) +
                  "," + (speedup ? std::to_string(*speedup) : "");
  }
  out.emit(Json{{"kind", a.kind}, {"rows", results}}, csv);

  const std::string timing_text =
      out.format == Format::json ? Json{{"kind", a.kind}, {"timings", timing}}.dump() : timing_csv;
  if (a.timings.empty()) {
    std::cerr << timing_text << "\n";
  } else {
    std::ofstream f(a.timings);
    if (!f) throw Failure(QPART_ERR_PARSE, "cannot write " + a.timings);
    f << timing_text << "\n";
  }
}

void apply_period_cap_env() {
  const char* env = std::getenv("QPART_PERIOD_CAP");
  if (!env) return;
  std::string s = trim(env);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw Failure(QPART_ERR_PARSE, "QPART_PERIOD_CAP must be a positive integer");
  unsigned long long cap = 0;
  try {
    cap = std::stoull(s);
  } catch (const std::exception&) {
    throw Failure(QPART_ERR_PARSE, "QPART_PERIOD_CAP is out of range");
  }
  qpart_status st = qpart_set_period_cap(cap);
  if (st != QPART_OK) throw Failure(QPART_ERR_PARSE, qpart_last_error());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted partition counts, fractional-part sums and quasi-polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(qpart_version()));
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  CountArgs count;
  auto* c = app.add_subcommand("count", "Number of nonnegative solutions of a.x = m");
  c->add_option("--coeffs", count.coeffs, "2 or 3 positive coefficients, comma separated")->required();
  c->add_option("--target", count.target, "Target m")->required();
  c->add_option("--method", count.method)->check(CLI::IsMember({"fast", "brute", "via-sum"}));

  CountArgs scount;
  auto* cs = app.add_subcommand("count-symbolic", "Count as a quasi-polynomial in n");
  cs->add_option("--coeffs", scount.coeffs, "2 or 3 quasi-polynomials")->required();
  cs->add_option("--target", scount.target, "Target quasi-polynomial")->required();

  FracsumArgs fsum;
  auto* fs = app.add_subcommand("fracsum", "sum_{x=r1}^{r2} ((r3 + r4*x) mod r5)");
  fs->add_option("--r", fsum.r, "r1,r2,r3,r4,r5")->required();
  fs->add_option("--method", fsum.method)->check(CLI::IsMember({"fast", "brute", "lemma"}));
  fs->add_flag("--symbolic", fsum.symbolic, "Treat r1..r5 as quasi-polynomials in n");

  std::string div_f, div_g;
  auto* dv = app.add_subcommand("qpoly-div", "Division with remainder in the quasi-polynomial ring");
  dv->add_option("--f", div_f, "Dividend")->required();
  dv->add_option("--g", div_g, "Divisor")->required();

  std::vector<std::string> gcd_f;
  bool gcd_bezout = false;
  auto* gc = app.add_subcommand("qpoly-gcd", "Nonnegative gcd of quasi-polynomials");
  gc->add_option("--f", gcd_f, "Inputs; repeat the flag or separate by commas")->required();
  gc->add_flag("--bezout", gcd_bezout, "Also report coefficients u with sum f_k u_k = gcd");

  std::string inv_a, inv_b;
  auto* iv = app.add_subcommand("qpoly-inv", "Inverse of a modulo b");
  iv->add_option("--a", inv_a)->required();
  iv->add_option("--b", inv_b)->required();

  std::string eval_f;
  std::vector<std::string> eval_n;
  auto* ev = app.add_subcommand("qpoly-eval", "Evaluate a quasi-polynomial");
  ev->add_option("--f", eval_f)->required();
  ev->add_option("--n", eval_n, "Points above the lower boundary")->required();

  BenchArgs bench;
  auto* bn = app.add_subcommand("bench", "Time closed forms against brute force");
  bn->add_option("--kind", bench.kind)->check(CLI::IsMember({"fracsum", "count3"}));
  bn->add_option("--methods", bench.methods, "Comma separated; empty for none");
  bn->add_option("--sizes", bench.sizes, "r5 for fracsum, m for count3 (1eK allowed)");
  bn->add_option("--coeffs", bench.coeffs, "count3 coefficients");
  bn->add_option("--reps", bench.reps, "Repetitions per timing");
  bn->add_option("--brute-cutoff", bench.brute_cutoff, "Largest size the linear-time methods run on");
  bn->add_option("--timings", bench.timings, "Timing table file (default: standard error)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  out.format = format == "text" ? Format::text : Format::json;
  try {
    apply_period_cap_env();
    if (*c) run_count(count, out);
    else if (*cs) run_count_symbolic(scount, out);
    else if (*fs) run_fracsum(fsum, out);
    else if (*dv) run_div(div_f, div_g, out);
    else if (*gc) run_gcd(gcd_f, gcd_bezout, out);
    else if (*iv) run_inverse(inv_a, inv_b, out);
    else if (*ev) run_eval(eval_f, eval_n, out);
    else if (*bn) run_bench(bench, out);
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.status);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
