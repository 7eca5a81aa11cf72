#include "knotcg/knotcg.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "knotcg/corpus.hpp"
#include "knotcg/report.hpp"

struct kcg_seifert {
  knotcg::SeifertMatrix matrix;
};

namespace {

thread_local std::string last_error;

kcg_status status_of(knotcg::ErrorCode code) {
  using knotcg::ErrorCode;
  switch (code) {
    case ErrorCode::Schema: return KCG_SCHEMA_ERROR;
    case ErrorCode::InvalidSeifert: return KCG_INVALID_SEIFERT;
    case ErrorCode::DegenerateForm: return KCG_DEGENERATE_FORM;
    case ErrorCode::NotPElementary: return KCG_NOT_P_ELEMENTARY;
    case ErrorCode::VerificationFailed: return KCG_VERIFICATION_FAILED;
    case ErrorCode::SingularMatrix:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::InvalidArgument: return KCG_INVALID_ARGUMENT;
    case ErrorCode::EnumerationTooLarge:
    case ErrorCode::GenusTooLarge: return KCG_TOO_LARGE;
    case ErrorCode::Internal: return KCG_INTERNAL_ERROR;
  }
  return KCG_INTERNAL_ERROR;
}

kcg_status fail(kcg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
kcg_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const knotcg::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KCG_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(KCG_INTERNAL_ERROR, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

kcg_status emit(const knotcg::report::Json& doc, char** json_out) {
  *json_out = duplicate(doc.dump(2));
  return KCG_OK;
}

kcg_status wrap(knotcg::SeifertMatrix m, kcg_seifert** out) {
  *out = new kcg_seifert{std::move(m)};
  return KCG_OK;
}

}  // namespace

extern "C" {

const char* kcg_version(void) { return "1.0.0"; }

const char* kcg_status_name(kcg_status status) {
  switch (status) {
    case KCG_OK: return "ok";
    case KCG_USAGE: return "usage";
    case KCG_SCHEMA_ERROR: return "schema_error";
    case KCG_INVALID_SEIFERT: return "invalid_seifert_matrix";
    case KCG_DEGENERATE_FORM: return "degenerate_form";
    case KCG_NOT_P_ELEMENTARY: return "not_p_elementary";
    case KCG_VERIFICATION_FAILED: return "verification_failed";
    case KCG_INVALID_ARGUMENT: return "invalid_argument";
    case KCG_TOO_LARGE: return "too_large";
    case KCG_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

const char* kcg_last_error(void) { return last_error.c_str(); }

void kcg_string_free(char* s) { std::free(s); }

kcg_status kcg_seifert_from_json(const char* json, kcg_seifert** out) {
  if (!json || !out) return fail(KCG_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return wrap(knotcg::report::parse_seifert(json), out); });
}

kcg_status kcg_seifert_from_name(const char* name, kcg_seifert** out) {
  if (!name || !out) return fail(KCG_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto m = knotcg::corpus::lookup(name);
    if (!m) return fail(KCG_INVALID_ARGUMENT, std::string("unknown corpus knot '") + name + "'");
    return wrap(std::move(*m), out);
  });
}

kcg_status kcg_seifert_suggest(const char* bound_c, kcg_seifert** out) {
  if (!bound_c || !out) return fail(KCG_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return wrap(knotcg::suggest_companion(knotcg::report::parse_rational(bound_c)), out);
  });
}

kcg_status kcg_seifert_connected_sum(const kcg_seifert* a, const kcg_seifert* b,
                                     kcg_seifert** out) {
  if (!a || !b || !out) return fail(KCG_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return wrap(knotcg::connected_sum(a->matrix, b->matrix), out); });
}

kcg_status kcg_seifert_mirror(const kcg_seifert* s, kcg_seifert** out) {
  if (!s || !out) return fail(KCG_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return wrap(knotcg::mirror(s->matrix), out); });
}

void kcg_seifert_free(kcg_seifert* s) { delete s; }

size_t kcg_seifert_genus(const kcg_seifert* s) { return s ? s->matrix.genus() : 0; }

kcg_status kcg_seifert_to_json(const kcg_seifert* s, char** json_out) {
  if (!s || !json_out) return fail(KCG_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(knotcg::report::to_json(s->matrix), json_out); });
}

kcg_status kcg_signature(const kcg_seifert* s, long k, long p, long* value) {
  if (!s || !value) return fail(KCG_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *value = knotcg::tristram_levine(s->matrix, knotcg::RationalAngle(k, p)).value;
    return KCG_OK;
  });
}

kcg_status kcg_analyze(const kcg_seifert* s, long bound, char** json_out) {
  if (!s || !json_out) return fail(KCG_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(knotcg::report::analyze(s->matrix, bound), json_out); });
}

kcg_status kcg_signature_report(const kcg_seifert* s, const char* angle, char** json_out) {
  if (!s || !angle || !json_out) return fail(KCG_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto a = knotcg::RationalAngle::parse(angle);
    const auto doc = knotcg::report::signature(s->matrix, a);
    if (!doc["singular"].get<bool>()) return emit(doc, json_out);
    std::string witness;
    try {
      knotcg::tristram_levine(s->matrix, a);
    } catch (const knotcg::Error& e) {
      witness = e.what();
    }
    emit(doc, json_out);
    return fail(KCG_DEGENERATE_FORM, witness);
  });
}

kcg_status kcg_cover_report(const kcg_seifert* s, int with_metabolizers, char** json_out) {
  if (!s || !json_out) return fail(KCG_INVALID_ARGUMENT, "null argument");
  return guarded(
      [&] { return emit(knotcg::report::cover(s->matrix, with_metabolizers != 0), json_out); });
}

kcg_status kcg_verify_paper(const kcg_seifert* companion, const char* const* sample_c,
                            size_t n_sample_c, int suggested, char** json_out) {
  if (!companion || !json_out || (n_sample_c > 0 && !sample_c))
    return fail(KCG_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<mpq_class> bounds;
    for (size_t i = 0; i < n_sample_c; ++i) {
      bounds.push_back(knotcg::report::parse_rational(sample_c[i]));
      if (bounds.back() < 0)
        return fail(KCG_INVALID_ARGUMENT, "sample bound C must be nonnegative");
    }
    if (suggested && bounds.empty())
      return fail(KCG_INVALID_ARGUMENT, "suggestion mode needs the bound C");
    const auto rep = knotcg::verify_paper_example(companion->matrix, bounds);
    emit(knotcg::report::verification(companion->matrix, rep,
                                      suggested ? &bounds.front() : nullptr),
         json_out);
    if (!rep.passed) {
      std::string offending;
      for (const auto& w : rep.witnesses)
        if (!w.witness) {
          offending += " span{";
          for (const auto& v : w.metabolizer.basis()) offending += knotcg::to_string(v);
          offending += "}";
        }
      return fail(KCG_VERIFICATION_FAILED,
                  "verification failed; metabolizers without witness:" +
                      (offending.empty() ? std::string(" none (see report)") : offending));
    }
    return KCG_OK;
  });
}

}  // extern "C"
