#include "boolrep/boolrep.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "boolrep/catalog.hpp"
#include "boolrep/errors.hpp"
#include "boolrep/extraction.hpp"
#include "boolrep/io.hpp"
#include "boolrep/lattice.hpp"
#include "boolrep/partitions.hpp"

struct br_matroid {
  boolrep::Matroid m;
};
struct br_lattice {
  boolrep::FlatLattice l;
};
struct br_repr {
  boolrep::Representation r;
};
struct br_matrix {
  boolrep::SbMatrix a;
};

namespace {

thread_local std::string last_error;

br_status status_of(boolrep::ErrorCode c) {
  using boolrep::ErrorCode;
  switch (c) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidWitness: return BR_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return BR_ERR_PARSE;
    case ErrorCode::EmptyFamily:
    case ErrorCode::NotDownwardClosed:
    case ErrorCode::UnequalBasisSizes:
    case ErrorCode::ExchangeFails: return BR_ERR_INVALID_MATROID;
    case ErrorCode::NotSimple: return BR_ERR_NOT_SIMPLE;
    case ErrorCode::AllLoops: return BR_ERR_ALL_LOOPS;
    case ErrorCode::GroundTooLarge:
    case ErrorCode::ChainLimitExceeded: return BR_ERR_LIMIT;
    case ErrorCode::LabelMismatch: return BR_ERR_LABEL_MISMATCH;
    case ErrorCode::ReductionFailed: return BR_ERR_REDUCTION_FAILED;
    case ErrorCode::Io: return BR_ERR_IO;
    case ErrorCode::Internal: return BR_ERR_INTERNAL;
  }
  return BR_ERR_INTERNAL;
}

br_status fail(br_status s, const std::string& what) {
  last_error = what;
  return s;
}

template <class F>
br_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return BR_OK;
  } catch (const boolrep::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BR_ERR_INTERNAL, e.what());
  }
}

#define BR_REQUIRE(cond)                                                          \
  do {                                                                            \
    if (!(cond)) return fail(BR_ERR_INVALID_ARGUMENT, "null argument: " #cond);   \
  } while (0)

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string render_matrix(const boolrep::SbMatrix& a, br_format fmt) {
  switch (fmt) {
    case BR_FORMAT_CSV: return boolrep::matrix_to_csv(a);
    case BR_FORMAT_PRETTY: return boolrep::matrix_to_pretty(a);
    case BR_FORMAT_TROPICAL: return boolrep::tropical_to_csv(boolrep::tropicalize(boolrep::BoolMatrix(a)));
    case BR_FORMAT_JSON: {
      nlohmann::ordered_json entries = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < a.n_rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < a.n_cols(); ++j) row.push_back(std::string(boolrep::to_token(a.at(i, j))));
        entries.push_back(row);
      }
      return nlohmann::ordered_json{{"rows", a.row_labels()}, {"cols", a.col_labels()}, {"entries", entries}}.dump() + "\n";
    }
    default: throw boolrep::Error(boolrep::ErrorCode::InvalidArgument, "format not available for matrices");
  }
}

}  // namespace

extern "C" {

const char* br_status_name(br_status s) {
  switch (s) {
    case BR_OK: return "ok";
    case BR_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BR_ERR_PARSE: return "parse error";
    case BR_ERR_INVALID_MATROID: return "invalid matroid";
    case BR_ERR_NOT_SIMPLE: return "matroid not simple";
    case BR_ERR_ALL_LOOPS: return "all elements are loops";
    case BR_ERR_LIMIT: return "limit exceeded";
    case BR_ERR_LABEL_MISMATCH: return "label mismatch";
    case BR_ERR_REDUCTION_FAILED: return "reduction failed";
    case BR_ERR_IO: return "i/o error";
    case BR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* br_last_error(void) { return last_error.c_str(); }

void br_string_free(char* s) { std::free(s); }

br_status br_matroid_from_json(const char* json, br_matroid** out) {
  BR_REQUIRE(json && out);
  return guard([&] { *out = new br_matroid{boolrep::matroid_from_json(json)}; });
}

br_status br_matroid_from_file(const char* path, br_matroid** out) {
  BR_REQUIRE(path && out);
  return guard([&] { *out = new br_matroid{boolrep::matroid_from_json(boolrep::read_file(path))}; });
}

br_status br_matroid_example(const char* name, br_matroid** out) {
  BR_REQUIRE(name && out);
  return guard([&] { *out = new br_matroid{boolrep::catalog_entry(name).matroid}; });
}

br_status br_matroid_uniform(size_t k, size_t n, br_matroid** out) {
  BR_REQUIRE(out);
  return guard([&] { *out = new br_matroid{boolrep::uniform(k, n)}; });
}

void br_matroid_free(br_matroid* m) { delete m; }
size_t br_matroid_size(const br_matroid* m) { return m ? m->m.size() : 0; }
size_t br_matroid_rank(const br_matroid* m) { return m ? m->m.rank() : 0; }
int br_matroid_is_simple(const br_matroid* m) { return m && boolrep::is_simple(m->m) ? 1 : 0; }

br_status br_matroid_to_json(const br_matroid* m, char** out) {
  BR_REQUIRE(m && out);
  return guard([&] { *out = dup(boolrep::matroid_to_json(m->m)); });
}

br_status br_matroid_simplify(const br_matroid* m, br_matroid** out, char** map_json) {
  BR_REQUIRE(m && out);
  return guard([&] {
    auto s = boolrep::simplify(m->m);
    nlohmann::ordered_json map = nlohmann::ordered_json::object();
    for (const auto& label : m->m.ground().labels()) {
      const auto& rep = s.representative.at(label);
      map[label] = rep ? nlohmann::ordered_json(*rep) : nlohmann::ordered_json(nullptr);
    }
    char* text = map_json ? dup(map.dump()) : nullptr;
    *out = new br_matroid{std::move(s.matroid)};
    if (map_json) *map_json = text;
  });
}

br_status br_lattice_new(const br_matroid* m, br_lattice** out) {
  BR_REQUIRE(m && out);
  return guard([&] { *out = new br_lattice{boolrep::flat_lattice(m->m)}; });
}

void br_lattice_free(br_lattice* l) { delete l; }
size_t br_lattice_size(const br_lattice* l) { return l ? l->l.size() : 0; }
size_t br_lattice_height(const br_lattice* l) { return l ? l->l.height() : 0; }

br_status br_lattice_nook(const br_lattice* l, size_t* out) {
  BR_REQUIRE(l && out);
  return guard([&] { *out = boolrep::nook(l->l); });
}

br_status br_lattice_render(const br_lattice* l, br_format fmt, br_lattice_matrix which, char** out) {
  BR_REQUIRE(l && out);
  return guard([&] {
    const auto& lat = l->l;
    auto matrix = [&] {
      return which == BR_LATTICE_STRUCTURE ? boolrep::structure_matrix(lat) : boolrep::lattice_representation(lat);
    };
    std::string text;
    switch (fmt) {
      case BR_FORMAT_CSV: text = boolrep::matrix_to_csv(matrix()); break;
      case BR_FORMAT_DOT: text = boolrep::lattice_to_dot(lat); break;
      case BR_FORMAT_JSON: text = boolrep::lattice_to_json(lat); break;
      case BR_FORMAT_PRETTY:
        text = which == BR_LATTICE_STRUCTURE ? boolrep::matrix_to_pretty(matrix()) : boolrep::lattice_to_pretty(lat);
        break;
      default: throw boolrep::Error(boolrep::ErrorCode::InvalidArgument, "format not available for lattices");
    }
    *out = dup(text);
  });
}

br_status br_partitions_render(const br_lattice* l, size_t limit, br_format fmt, char** out, size_t* count) {
  BR_REQUIRE(l && out);
  return guard([&] {
    if (fmt != BR_FORMAT_PRETTY && fmt != BR_FORMAT_JSON)
      throw boolrep::Error(boolrep::ErrorCode::InvalidArgument, "partitions render as pretty or json");
    const auto chains = boolrep::maximal_chains(l->l, limit);
    std::string text = fmt == BR_FORMAT_JSON ? "[" : "";
    for (std::size_t i = 0; i < chains.size(); ++i) {
      const auto q = boolrep::partition_of_chain(l->l, chains[i]);
      if (fmt == BR_FORMAT_JSON)
        text += (i ? "," : "") + boolrep::partition_to_json(l->l, q);
      else
        text += boolrep::partition_to_pretty(l->l, q) + "\n";
    }
    if (fmt == BR_FORMAT_JSON) text += "]\n";
    *out = dup(text);
    if (count) *count = chains.size();
  });
}

br_status br_transversal_search(const br_lattice* l, const char* labels, size_t limit, int* found,
                                char** partition_json) {
  BR_REQUIRE(l && labels && found);
  return guard([&] {
    if (!l->l.has_ground()) throw boolrep::Error(boolrep::ErrorCode::InvalidArgument, "not a lattice of flats");
    std::vector<std::string> names;
    std::stringstream ss(labels);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) names.push_back(item);
    const auto w = l->l.ground().subset(names);
    const auto q = boolrep::exists_transversal_partition(l->l, w, limit);
    char* text = q && partition_json ? dup(boolrep::partition_to_json(l->l, *q) + "\n") : nullptr;
    *found = q ? 1 : 0;
    if (partition_json) *partition_json = text;
  });
}

br_status br_repr_extract(const br_matroid* m, br_repr** out) {
  BR_REQUIRE(m && out);
  return guard([&] { *out = new br_repr{boolrep::extract_representation(m->m)}; });
}

br_status br_repr_reduce(const br_repr* r, const br_matroid* m, br_reduction mode, br_repr** out) {
  BR_REQUIRE(r && m && out);
  return guard([&] {
    boolrep::ReductionMode rm;
    switch (mode) {
      case BR_REDUCE_NONE: rm = boolrep::ReductionMode::Full; break;
      case BR_REDUCE_PAPER: rm = boolrep::ReductionMode::Paper; break;
      case BR_REDUCE_DEDUPE: rm = boolrep::ReductionMode::Dedupe; break;
      case BR_REDUCE_VERIFIED: rm = boolrep::ReductionMode::Verified; break;
      default: throw boolrep::Error(boolrep::ErrorCode::InvalidArgument, "unknown reduction mode");
    }
    *out = new br_repr{boolrep::reduce(r->r, m->m, rm)};
  });
}

void br_repr_free(br_repr* r) { delete r; }
size_t br_repr_rows(const br_repr* r) { return r ? r->r.matrix.n_rows() : 0; }
size_t br_repr_cols(const br_repr* r) { return r ? r->r.matrix.n_cols() : 0; }

br_status br_repr_render(const br_repr* r, br_format fmt, char** out) {
  BR_REQUIRE(r && out);
  return guard([&] {
    *out = dup(fmt == BR_FORMAT_JSON ? boolrep::representation_to_json(r->r) : render_matrix(r->r.matrix.sb(), fmt));
  });
}

br_status br_repr_matrix(const br_repr* r, br_matrix** out) {
  BR_REQUIRE(r && out);
  return guard([&] { *out = new br_matrix{r->r.matrix.sb()}; });
}

br_status br_matrix_from_csv(const char* csv, br_matrix** out) {
  BR_REQUIRE(csv && out);
  return guard([&] { *out = new br_matrix{boolrep::matrix_from_csv(csv)}; });
}

br_status br_matrix_from_file(const char* path, br_matrix** out) {
  BR_REQUIRE(path && out);
  return guard([&] { *out = new br_matrix{boolrep::matrix_from_csv(boolrep::read_file(path))}; });
}

void br_matrix_free(br_matrix* a) { delete a; }
size_t br_matrix_rows(const br_matrix* a) { return a ? a->a.n_rows() : 0; }
size_t br_matrix_cols(const br_matrix* a) { return a ? a->a.n_cols() : 0; }

br_status br_matrix_rank(const br_matrix* a, size_t* out) {
  BR_REQUIRE(a && out);
  return guard([&] { *out = boolrep::rank(a->a); });
}

br_status br_matrix_render(const br_matrix* a, br_format fmt, char** out) {
  BR_REQUIRE(a && out);
  return guard([&] { *out = dup(render_matrix(a->a, fmt)); });
}

br_status br_verify(const br_matrix* a, const br_matroid* m, int* ok, char** report) {
  BR_REQUIRE(a && m && ok);
  return guard([&] {
    const auto rep = boolrep::verify_representation(a->a, m->m);
    std::string text;
    if (report) {
      const auto& g = m->m.ground();
      if (rep.ok) {
        text = "ok: " + std::to_string(rep.checked_count) + " subsets agree\n";
      } else {
        text = "FAILED: " + std::to_string(rep.mismatches.size()) + " of " + std::to_string(rep.checked_count) +
               " subsets disagree\n";
        for (auto y : rep.mismatches)
          text += "  " + g.format(y) + (m->m.is_independent(y) ? ": independent in the matroid, dependent columns\n"
                                                               : ": dependent in the matroid, independent columns\n");
      }
    }
    char* p = report ? dup(text) : nullptr;
    *ok = rep.ok ? 1 : 0;
    if (report) *report = p;
  });
}

}  // extern "C"
