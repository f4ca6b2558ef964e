#include "qpart/qpart.h"

#include "core/denumerant.hpp"
#include "core/errors.hpp"
#include "core/fracsum.hpp"
#include "core/gdiv.hpp"
#include "core/quasipoly.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

struct qpart_qpoly {
  qpart::QuasiPoly value;
};

namespace {

thread_local std::string g_last_error;

qpart_status fail(qpart_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs body, translating library exceptions into status codes.
template <class Body>
qpart_status guarded(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return QPART_OK;
  } catch (const qpart::ParseError& e) {
    return fail(QPART_ERR_PARSE, e.what());
  } catch (const qpart::DomainError& e) {
    return fail(QPART_ERR_DOMAIN, e.what());
  } catch (const qpart::InvariantViolation& e) {
    return fail(QPART_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QPART_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QPART_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QPART_ERR_INTERNAL, "unknown failure");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* name) {
  if (!p) throw qpart::ParseError(std::string(name) + " is null");
}

qpart::BigInt integer(const char* text, const char* name) {
  require(text, name);
  return qpart::parse_bigint(text);
}

qpart_qpoly* wrap(qpart::QuasiPoly q) { return new qpart_qpoly{std::move(q)}; }

std::vector<qpart::QuasiPoly> unwrap_all(const qpart_qpoly* const* fs, size_t count) {
  require(fs, "input list");
  std::vector<qpart::QuasiPoly> out;
  out.reserve(count);
  for (size_t k = 0; k < count; ++k) {
    require(fs[k], "input");
    out.push_back(fs[k]->value);
  }
  return out;
}

qpart::FracSumInstance instance(const char* const r[5]) {
  require(r, "r");
  return {integer(r[0], "r1"), integer(r[1], "r2"), integer(r[2], "r3"), integer(r[3], "r4"),
          integer(r[4], "r5")};
}

}  // namespace

extern "C" {

QPART_API const char* qpart_version(void) { return "0.1.0"; }

QPART_API const char* qpart_last_error(void) { return g_last_error.c_str(); }

QPART_API void qpart_string_free(char* s) { std::free(s); }

QPART_API uint64_t qpart_period_cap(void) { return qpart::period_cap(); }

QPART_API qpart_status qpart_set_period_cap(uint64_t cap) {
  return guarded([&] { qpart::set_period_cap(cap); });
}

QPART_API qpart_status qpart_qpoly_parse(const char* text, qpart_qpoly** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(qpart::parse_quasi_poly(text));
  });
}

QPART_API void qpart_qpoly_free(qpart_qpoly* q) { delete q; }

QPART_API qpart_status qpart_qpoly_to_json(const qpart_qpoly* q, char** out) {
  return guarded([&] {
    require(q, "q");
    require(out, "out");
    *out = dup_string(qpart::to_json(q->value));
  });
}

QPART_API qpart_status qpart_qpoly_to_text(const qpart_qpoly* q, char** out) {
  return guarded([&] {
    require(q, "q");
    require(out, "out");
    *out = dup_string(q->value.to_string());
  });
}

QPART_API uint64_t qpart_qpoly_period(const qpart_qpoly* q) { return q ? q->value.period() : 0; }

QPART_API qpart_status qpart_qpoly_lower_boundary(const qpart_qpoly* q, char** out) {
  return guarded([&] {
    require(q, "q");
    require(out, "out");
    *out = dup_string(q->value.lower_boundary().get_str());
  });
}

QPART_API qpart_status qpart_qpoly_eval(const qpart_qpoly* q, const char* n, char** out) {
  return guarded([&] {
    require(q, "q");
    require(out, "out");
    *out = dup_string(q->value(integer(n, "n")).get_str());
  });
}

QPART_API int qpart_qpoly_equals(const qpart_qpoly* a, const qpart_qpoly* b) {
  if (!a || !b) return 0;
  return qpart::equals(a->value, b->value) ? 1 : 0;
}

QPART_API qpart_status qpart_qpoly_div(const qpart_qpoly* f, const qpart_qpoly* g,
                                       qpart_qpoly** quotient, qpart_qpoly** remainder) {
  return guarded([&] {
    require(f, "f");
    require(g, "g");
    require(quotient, "quotient");
    require(remainder, "remainder");
    qpart::DivResult r = qpart::gdiv_R(f->value, g->value);
    auto q = std::make_unique<qpart_qpoly>(qpart_qpoly{std::move(r.quotient)});
    *remainder = wrap(std::move(r.remainder));
    *quotient = q.release();
  });
}

QPART_API qpart_status qpart_qpoly_gcd(const qpart_qpoly* const* fs, size_t count,
                                       qpart_qpoly** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(qpart::ggcd(unwrap_all(fs, count)));
  });
}

QPART_API qpart_status qpart_qpoly_bezout(const qpart_qpoly* const* fs, size_t count,
                                          qpart_qpoly** gcd, qpart_qpoly** coefficients) {
  return guarded([&] {
    require(gcd, "gcd");
    require(coefficients, "coefficients");
    qpart::BezoutResult r = qpart::bezout(unwrap_all(fs, count));
    std::vector<std::unique_ptr<qpart_qpoly>> us;
    for (auto& u : r.coefficients) us.push_back(std::make_unique<qpart_qpoly>(qpart_qpoly{std::move(u)}));
    auto d = std::make_unique<qpart_qpoly>(qpart_qpoly{std::move(r.gcd)});
    for (size_t k = 0; k < us.size(); ++k) coefficients[k] = us[k].release();
    *gcd = d.release();
  });
}

QPART_API qpart_status qpart_qpoly_inverse(const qpart_qpoly* a, const qpart_qpoly* b,
                                           qpart_qpoly** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = wrap(qpart::inverse_mod(a->value, b->value));
  });
}

QPART_API qpart_status qpart_count(const char* const* coeffs, size_t count, const char* target,
                                   qpart_count_method method, char** out) {
  return guarded([&] {
    require(coeffs, "coeffs");
    require(out, "out");
    std::vector<qpart::BigInt> a;
    for (size_t k = 0; k < count; ++k) a.push_back(integer(coeffs[k], "coefficient"));
    const qpart::BigInt m = integer(target, "target");
    qpart::BigInt result;
    switch (method) {
      case QPART_COUNT_BRUTE:
        result = qpart::count_bruteforce(a, m);
        break;
      case QPART_COUNT_FAST:
        if (count == 2) {
          result = qpart::count2(a[0], a[1], m);
        } else if (count == 3) {
          result = qpart::count3(a[0], a[1], a[2], m);
        } else {
          throw qpart::ParseError("the closed form takes 2 or 3 coefficients");
        }
        break;
      case QPART_COUNT_VIA_SUM:
        if (count != 3) throw qpart::ParseError("the via-sum method takes 3 coefficients");
        result = qpart::count3_via_sum(a[0], a[1], a[2], m);
        break;
      default:
        throw qpart::ParseError("unknown count method");
    }
    *out = dup_string(result.get_str());
  });
}

QPART_API qpart_status qpart_count_symbolic(const qpart_qpoly* const* coeffs, size_t count,
                                            const qpart_qpoly* target, qpart_qpoly** out) {
  return guarded([&] {
    require(target, "target");
    require(out, "out");
    auto a = unwrap_all(coeffs, count);
    if (count == 2) {
      *out = wrap(qpart::count2_symbolic(a[0], a[1], target->value));
    } else if (count == 3) {
      *out = wrap(qpart::count3_symbolic(a[0], a[1], a[2], target->value));
    } else {
      throw qpart::ParseError("symbolic counts take 2 or 3 coefficients");
    }
  });
}

QPART_API qpart_status qpart_fracsum(const char* const r[5], qpart_sum_method method, char** out) {
  return guarded([&] {
    require(out, "out");
    const qpart::FracSumInstance s = instance(r);
    qpart::BigInt result;
    switch (method) {
      case QPART_SUM_FAST:
        result = qpart::sum_fast(s);
        break;
      case QPART_SUM_BRUTE:
        result = qpart::sum_bruteforce(s);
        break;
      case QPART_SUM_LEMMA:
        result = qpart::sum_lemma(s);
        break;
      default:
        throw qpart::ParseError("unknown sum method");
    }
    *out = dup_string(result.get_str());
  });
}

QPART_API qpart_status qpart_fracsum_chain_length(const char* const r[5], size_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = qpart::euclid_chain(instance(r)).levels.size();
  });
}

QPART_API qpart_status qpart_fracsum_symbolic(const qpart_qpoly* const r[5], qpart_qpoly** out) {
  return guarded([&] {
    require(out, "out");
    auto a = unwrap_all(r, 5);
    *out = wrap(qpart::sum_fast_symbolic(a[0], a[1], a[2], a[3], a[4]));
  });
}

}  // extern "C"
