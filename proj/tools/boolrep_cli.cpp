// boolrep: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 verification (or verified reduction) failed,
// 2 bad input, 3 a size or enumeration cap was hit, 4 internal error.

#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "boolrep/boolrep.h"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

struct Failure {
  int code;
};

int exit_code_of(br_status s) {
  switch (s) {
    case BR_OK: return 0;
    case BR_ERR_REDUCTION_FAILED: return kExitVerifyFailed;
    case BR_ERR_LIMIT: return kExitCap;
    case BR_ERR_INTERNAL: return kExitInternal;
    default: return kExitBadInput;
  }
}

void check(br_status s) {
  if (s == BR_OK) return;
  std::cerr << "error: " << br_last_error() << " (" << br_status_name(s) << ")\n";
  throw Failure{exit_code_of(s)};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Matroid = std::unique_ptr<br_matroid, Deleter<br_matroid, br_matroid_free>>;
using Lattice = std::unique_ptr<br_lattice, Deleter<br_lattice, br_lattice_free>>;
using Repr = std::unique_ptr<br_repr, Deleter<br_repr, br_repr_free>>;
using Matrix = std::unique_ptr<br_matrix, Deleter<br_matrix, br_matrix_free>>;

std::string take(char* s) {
  std::string out = s ? s : "";
  br_string_free(s);
  return out;
}

Matroid load(const std::string& source, const std::string& file) {
  if (source.empty() == file.empty()) {
    std::cerr << "error: give exactly one matroid source (example:<name>, a JSON path, or --file)\n";
    throw Failure{kExitBadInput};
  }
  br_matroid* m = nullptr;
  const std::string prefix = "example:";
  if (!source.empty() && source.rfind(prefix, 0) == 0)
    check(br_matroid_example(source.substr(prefix.size()).c_str(), &m));
  else
    check(br_matroid_from_file((file.empty() ? source : file).c_str(), &m));
  return Matroid(m);
}

// The constructions need a simple matroid; anything else is replaced by its
// simplification, with the element map on stderr.
Matroid simple(Matroid m) {
  if (br_matroid_is_simple(m.get())) return m;
  br_matroid* s = nullptr;
  char* map = nullptr;
  check(br_matroid_simplify(m.get(), &s, &map));
  std::cerr << "warning: matroid is not simple; using its simplification\n"
            << "element map (null = loop): " << take(map) << "\n";
  return Matroid(s);
}

Lattice lattice_of(const br_matroid* m) {
  br_lattice* l = nullptr;
  check(br_lattice_new(m, &l));
  return Lattice(l);
}

Repr extract(const br_matroid* m) {
  br_repr* r = nullptr;
  check(br_repr_extract(m, &r));
  return Repr(r);
}

struct SourceOpts {
  std::string source, file;
};

void add_source(CLI::App* cmd, SourceOpts& o) {
  cmd->add_option("matroid", o.source, "example:<name> or a matroid JSON file");
  cmd->add_option("--file,-f", o.file, "matroid JSON file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean representations of matroids from their lattices of flats"};
  app.require_subcommand(1);

  SourceOpts src;
  br_format format = BR_FORMAT_PRETTY;

  auto* lattice = app.add_subcommand("lattice", "flats, heights and the lattice matrices, or the Hasse diagram");
  add_source(lattice, src);
  br_lattice_matrix which = BR_LATTICE_REPRESENTATION;
  lattice->add_option("--format", format, "csv, dot, pretty or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, br_format>{{"csv", BR_FORMAT_CSV},
                                                                             {"dot", BR_FORMAT_DOT},
                                                                             {"pretty", BR_FORMAT_PRETTY},
                                                                             {"json", BR_FORMAT_JSON}}));
  lattice
      ->add_option("--matrix", which, "representation (complement of the order) or structure (the order)")
      ->transform(CLI::CheckedTransformer(std::map<std::string, br_lattice_matrix>{
          {"representation", BR_LATTICE_REPRESENTATION}, {"structure", BR_LATTICE_STRUCTURE}}));

  auto* repr = app.add_subcommand("repr", "boolean representation extracted from the lattice of flats");
  add_source(repr, src);
  br_reduction reduction = BR_REDUCE_NONE;
  repr->add_option("--reduce", reduction, "none, paper, dedupe or verified")
      ->transform(CLI::CheckedTransformer(std::map<std::string, br_reduction>{{"none", BR_REDUCE_NONE},
                                                                                {"paper", BR_REDUCE_PAPER},
                                                                                {"dedupe", BR_REDUCE_DEDUPE},
                                                                                {"verified", BR_REDUCE_VERIFIED}}));
  br_format repr_format = BR_FORMAT_CSV;
  repr->add_option("--format", repr_format, "csv, json, pretty or tropical")
      ->transform(CLI::CheckedTransformer(std::map<std::string, br_format>{{"csv", BR_FORMAT_CSV},
                                                                             {"json", BR_FORMAT_JSON},
                                                                             {"pretty", BR_FORMAT_PRETTY},
                                                                             {"tropical", BR_FORMAT_TROPICAL}}));

  auto* verify = app.add_subcommand("verify", "check that a matrix represents the matroid (exit 1 if not)");
  add_source(verify, src);
  std::string matrix_file;
  verify->add_option("--matrix", matrix_file, "matrix CSV to check; default: the extracted representation");

  auto* partitions = app.add_subcommand("partitions", "maximal chains of flats and their partitions");
  add_source(partitions, src);
  std::size_t limit = 1'000'000;
  partitions->add_option("--limit", limit, "maximum number of chains to enumerate")->check(CLI::PositiveNumber);
  br_format part_format = BR_FORMAT_PRETTY;
  partitions->add_option("--format", part_format, "pretty or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, br_format>{{"pretty", BR_FORMAT_PRETTY}, {"json", BR_FORMAT_JSON}}));
  std::string transversal;
  partitions->add_option("--transversal", transversal,
                         "comma-separated elements; find a partition having them as a partial transversal");

  auto* rank = app.add_subcommand("rank", "superboolean rank of a matrix CSV");
  std::string rank_file;
  rank->add_option("matrix", rank_file, "matrix CSV (tokens 0, 1, 1v)")->required();

  auto* example = app.add_subcommand("example", "print a catalog matroid as JSON (u34, fivept, k4, w3)");
  std::string example_name;
  example->add_option("name", example_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*lattice) {
      auto m = simple(load(src.source, src.file));
      auto l = lattice_of(m.get());
      char* out = nullptr;
      check(br_lattice_render(l.get(), format, which, &out));
      std::cout << take(out);
    } else if (*repr) {
      auto m = simple(load(src.source, src.file));
      auto full = extract(m.get());
      br_repr* r = nullptr;
      check(br_repr_reduce(full.get(), m.get(), reduction, &r));
      Repr reduced(r);
      char* out = nullptr;
      check(br_repr_render(reduced.get(), repr_format, &out));
      std::cout << take(out);
    } else if (*verify) {
      auto m = load(src.source, src.file);
      br_matrix* a = nullptr;
      if (matrix_file.empty()) {
        m = simple(std::move(m));
        auto r = extract(m.get());
        check(br_repr_matrix(r.get(), &a));
      } else {
        check(br_matrix_from_file(matrix_file.c_str(), &a));
      }
      Matrix matrix(a);
      int ok = 0;
      char* report = nullptr;
      check(br_verify(matrix.get(), m.get(), &ok, &report));
      std::cout << take(report);
      return ok ? 0 : kExitVerifyFailed;
    } else if (*partitions) {
      auto m = simple(load(src.source, src.file));
      auto l = lattice_of(m.get());
      if (!transversal.empty()) {
        int found = 0;
        char* q = nullptr;
        check(br_transversal_search(l.get(), transversal.c_str(), limit, &found, &q));
        std::cout << (found ? take(q) : std::string("none\n"));
      } else {
        char* out = nullptr;
        check(br_partitions_render(l.get(), limit, part_format, &out, nullptr));
        std::cout << take(out);
      }
    } else if (*rank) {
      br_matrix* a = nullptr;
      check(br_matrix_from_file(rank_file.c_str(), &a));
      Matrix matrix(a);
      std::size_t r = 0;
      check(br_matrix_rank(matrix.get(), &r));
      std::cout << r << "\n";
    } else if (*example) {
      br_matroid* m = nullptr;
      check(br_matroid_example(example_name.c_str(), &m));
      Matroid owned(m);
      char* out = nullptr;
      check(br_matroid_to_json(owned.get(), &out));
      std::cout << take(out);
    }
  } catch (const Failure& f) {
    return f.code;
  }
  std::cout.flush();
  return std::cout ? 0 : kExitInternal;
}
