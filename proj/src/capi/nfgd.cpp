#include "nfgd/nfgd.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <variant>

#include "io/doc_transforms.hpp"
#include "io/reports.hpp"
#include "io/verify.hpp"

using nfgd::GameDocument;
using nfgd::Rational;

struct nfgd_doc {
  std::variant<GameDocument<Rational>, GameDocument<double>> doc;
};

struct nfgd_decomp {
  std::variant<nfgd::DecompositionDocuments<Rational>, nfgd::DecompositionDocuments<double>> parts;
};

namespace {

thread_local std::string g_last_error;

nfgd_status StatusOf(nfgd::ErrorKind kind) {
  switch (kind) {
    case nfgd::ErrorKind::kValidation:
      return NFGD_ERR_VALIDATION;
    case nfgd::ErrorKind::kShape:
      return NFGD_ERR_SHAPE;
    case nfgd::ErrorKind::kParse:
      return NFGD_ERR_PARSE;
    case nfgd::ErrorKind::kPrecondition:
      return NFGD_ERR_PRECONDITION;
  }
  return NFGD_ERR_INTERNAL;
}

nfgd_status Report(nfgd_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

struct ArgumentError {
  std::string message;
};

struct IoError {
  std::string message;
};

template <typename F>
nfgd_status Guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return NFGD_OK;
  } catch (const nfgd::Error& e) {
    return Report(StatusOf(e.kind()), e.what());
  } catch (const ArgumentError& e) {
    return Report(NFGD_ERR_ARGUMENT, e.message);
  } catch (const IoError& e) {
    return Report(NFGD_ERR_IO, e.message);
  } catch (const std::bad_alloc&) {
    return Report(NFGD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Report(NFGD_ERR_INTERNAL, e.what());
  }
}

void Require(bool condition, const char* message) {
  if (!condition) throw ArgumentError{message};
}

char* Copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename T>
nfgd_doc* Wrap(GameDocument<T> doc) {
  return new nfgd_doc{std::move(doc)};
}

std::vector<std::string> SplitLines(const char* text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

template <typename T>
nfgd::Game<T> GameIn(const nfgd_doc* source) {
  if (const auto* exact = std::get_if<GameDocument<Rational>>(&source->doc)) {
    return nfgd::ConvertGame<T>(exact->game);
  }
  if constexpr (std::is_same_v<T, double>) {
    return std::get<GameDocument<double>>(source->doc).game;
  } else {
    throw ArgumentError{"a float document cannot be used with an exact one"};
  }
}

}  // namespace

extern "C" {

const char* nfgd_version(void) { return "1.0.0"; }

const char* nfgd_last_error(void) { return g_last_error.c_str(); }

const char* nfgd_status_name(nfgd_status status) {
  switch (status) {
    case NFGD_OK:
      return "ok";
    case NFGD_ERR_VALIDATION:
      return "validation error";
    case NFGD_ERR_SHAPE:
      return "shape error";
    case NFGD_ERR_PARSE:
      return "parse error";
    case NFGD_ERR_PRECONDITION:
      return "precondition failed";
    case NFGD_ERR_IO:
      return "i/o error";
    case NFGD_ERR_ARGUMENT:
      return "invalid argument";
    case NFGD_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void nfgd_string_free(char* s) { std::free(s); }

nfgd_status nfgd_doc_parse(const char* text, nfgd_doc** out) {
  return Guard([&] {
    Require(text && out, "null argument");
    *out = Wrap(nfgd::ParseGameDocument(text));
  });
}

nfgd_status nfgd_doc_load(const char* path, nfgd_doc** out) {
  return Guard([&] {
    Require(path && out, "null argument");
    std::ifstream in(path);
    if (!in) throw IoError{std::string("cannot open '") + path + "'"};
    std::ostringstream text;
    text << in.rdbuf();
    *out = Wrap(nfgd::ParseGameDocument(text.str()));
  });
}

void nfgd_doc_free(nfgd_doc* doc) { delete doc; }

nfgd_status nfgd_doc_clone(const nfgd_doc* doc, nfgd_doc** out) {
  return Guard([&] {
    Require(doc && out, "null argument");
    *out = new nfgd_doc(*doc);
  });
}

nfgd_status nfgd_doc_serialize(const nfgd_doc* doc, char** out) {
  return Guard([&] {
    Require(doc && out, "null argument");
    *out = Copy(std::visit([](const auto& d) { return nfgd::SerializeGameDocument(d); }, doc->doc));
  });
}

nfgd_status nfgd_doc_save(const nfgd_doc* doc, const char* path) {
  return Guard([&] {
    Require(doc && path, "null argument");
    std::string text = std::visit([](const auto& d) { return nfgd::SerializeGameDocument(d); }, doc->doc);
    std::ofstream file(path);
    if (!file) throw IoError{std::string("cannot write '") + path + "'"};
    file << text;
    if (!file) throw IoError{std::string("cannot write '") + path + "'"};
  });
}

nfgd_status nfgd_doc_override(nfgd_doc* doc, const char* statement) {
  return Guard([&] {
    Require(doc && statement, "null argument");
    auto* exact = std::get_if<GameDocument<Rational>>(&doc->doc);
    Require(exact != nullptr, "overrides apply to exact documents only");
    nfgd::ApplyParameterOverrides(*exact, {statement});
  });
}

nfgd_status nfgd_doc_set_mode(nfgd_doc* doc, nfgd_mode mode) {
  return Guard([&] {
    Require(doc != nullptr, "null argument");
    Require(mode == NFGD_EXACT || mode == NFGD_FLOAT, "unknown mode");
    if (mode == nfgd_doc_mode(doc)) return;
    Require(mode == NFGD_FLOAT, "a float document cannot be made exact");
    doc->doc = nfgd::ConvertDocument<double>(std::get<GameDocument<Rational>>(doc->doc));
  });
}

nfgd_mode nfgd_doc_mode(const nfgd_doc* doc) { return doc->doc.index() == 0 ? NFGD_EXACT : NFGD_FLOAT; }

size_t nfgd_doc_num_players(const nfgd_doc* doc) {
  return std::visit([](const auto& d) { return static_cast<size_t>(d.game.num_players()); }, doc->doc);
}

size_t nfgd_doc_num_profiles(const nfgd_doc* doc) {
  return std::visit([](const auto& d) { return d.game.space().num_profiles(); }, doc->doc);
}

nfgd_status nfgd_doc_payoff(const nfgd_doc* doc, size_t player, size_t profile, char** out) {
  return Guard([&] {
    Require(doc && out, "null argument");
    Require(player < nfgd_doc_num_players(doc) && profile < nfgd_doc_num_profiles(doc),
            "index out of range");
    *out = Copy(std::visit(
        [&](const auto& d) { return nfgd::FormatScalar(d.game.at(static_cast<int>(player), profile)); },
        doc->doc));
  });
}

nfgd_status nfgd_decompose(const nfgd_doc* doc, nfgd_decomp** out) {
  return Guard([&] {
    Require(doc && out, "null argument");
    *out = std::visit([](const auto& d) { return new nfgd_decomp{nfgd::DecomposeDocument(d)}; }, doc->doc);
  });
}

void nfgd_decomp_free(nfgd_decomp* d) { delete d; }

nfgd_status nfgd_decomp_component(const nfgd_decomp* d, nfgd_component which, nfgd_doc** out) {
  return Guard([&] {
    Require(d && out, "null argument");
    *out = std::visit(
        [&](const auto& parts) {
          switch (which) {
            case NFGD_NONSTRATEGIC:
              return Wrap(parts.nonstrategic);
            case NFGD_POTENTIAL:
              return Wrap(parts.potential);
            case NFGD_HARMONIC:
              return Wrap(parts.harmonic);
            case NFGD_PHI:
              return Wrap(parts.phi);
          }
          throw ArgumentError{"unknown component"};
        },
        d->parts);
  });
}

nfgd_status nfgd_decomp_report(const nfgd_decomp* d, char** out) {
  return Guard([&] {
    Require(d && out, "null argument");
    *out = Copy(std::visit([](const auto& parts) { return parts.report; }, d->parts));
  });
}

nfgd_status nfgd_classify(const nfgd_doc* doc, char** report) {
  return Guard([&] {
    Require(doc && report, "null argument");
    *report = Copy(std::visit([](const auto& d) { return nfgd::ClassificationReport(d); }, doc->doc));
  });
}

nfgd_status nfgd_check_eq(const nfgd_doc* doc, const char* profile, char** report, int* is_nash) {
  return Guard([&] {
    Require(doc && profile && report, "null argument");
    std::string text =
        std::visit([&](const auto& d) { return nfgd::EquilibriumReport(d, profile); }, doc->doc);
    if (is_nash) *is_nash = text.find("\nnash yes") != std::string::npos;
    *report = Copy(text);
  });
}

nfgd_status nfgd_closest_potential(const nfgd_doc* doc, nfgd_doc** out) {
  return Guard([&] {
    Require(doc && out, "null argument");
    *out = std::visit([](const auto& d) { return Wrap(nfgd::ClosestPotentialDocument(d)); }, doc->doc);
  });
}

nfgd_status nfgd_permute(const nfgd_doc* doc, const char* player, const char* const* order, size_t count,
                         nfgd_doc** out) {
  return Guard([&] {
    Require(doc && player && out && (order || count == 0), "null argument");
    std::vector<std::string> labels;
    for (size_t k = 0; k < count; ++k) {
      Require(order[k] != nullptr, "null label");
      labels.emplace_back(order[k]);
    }
    *out = std::visit([&](const auto& d) { return Wrap(nfgd::PermuteDocument(d, player, labels)); }, doc->doc);
  });
}

nfgd_status nfgd_translate(const nfgd_doc* doc, const nfgd_doc* translation, nfgd_doc** out) {
  return Guard([&] {
    Require(doc && translation && out, "null argument");
    *out = std::visit(
        [&](const auto& d) {
          using T = typename std::decay_t<decltype(d.game)>::Scalar;
          return Wrap(nfgd::TranslateDocument(d, GameIn<T>(translation)));
        },
        doc->doc);
  });
}

nfgd_status nfgd_scale(const nfgd_doc* doc, const char* beta, nfgd_doc** out) {
  return Guard([&] {
    Require(doc && beta && out, "null argument");
    *out = std::visit(
        [&](const auto& d) {
          using T = typename std::decay_t<decltype(d.game)>::Scalar;
          auto b = nfgd::ParseCoMeasureStatements(d.game.space_ptr(), SplitLines(beta));
          return Wrap(nfgd::ScaleDocument(d, nfgd::ConvertCoMeasure<T>(b)));
        },
        doc->doc);
  });
}

nfgd_status nfgd_extend(const nfgd_doc* doc, const char* player, const char* strategy, const char* label,
                        const char* lambda, nfgd_doc** out) {
  return Guard([&] {
    Require(doc && player && strategy && label && out, "null argument");
    Rational l = lambda ? nfgd::ParseRational(lambda) : Rational(1, 2);
    *out = std::visit(
        [&](const auto& d) { return Wrap(nfgd::ExtendDocument(d, player, strategy, label, l)); }, doc->doc);
  });
}

nfgd_status nfgd_reduce(const nfgd_doc* doc, const char* player, const char* removed, const char* kept,
                        nfgd_doc** out) {
  return Guard([&] {
    Require(doc && player && removed && kept && out, "null argument");
    *out = std::visit([&](const auto& d) { return Wrap(nfgd::ReduceDocument(d, player, removed, kept)); },
                      doc->doc);
  });
}

nfgd_status nfgd_reduce_redundant(const nfgd_doc* doc, const char* player, const char* removed,
                                  const char* alpha, nfgd_doc** out) {
  return Guard([&] {
    Require(doc && player && removed && alpha && out, "null argument");
    std::vector<Rational> weights;
    std::istringstream in(alpha);
    for (std::string w; in >> w;) weights.push_back(nfgd::ParseRational(w));
    *out = std::visit(
        [&](const auto& d) { return Wrap(nfgd::ReduceRedundantDocument(d, player, removed, weights)); },
        doc->doc);
  });
}

void nfgd_verify_defaults(nfgd_verify_options* options) {
  if (!options) return;
  options->law = "reconstruction";
  options->trials = 100;
  options->seed = 0;
  options->players = 0;
  options->strategies = 0;
  options->exact = 1;
  options->minimize = 1;
}

const char* nfgd_law_names(void) {
  static const std::string names = [] {
    std::string out;
    for (nfgd::Law law : nfgd::AllLaws()) out += (out.empty() ? "" : " ") + std::string(nfgd::LawName(law));
    return out;
  }();
  return names.c_str();
}

namespace {

nfgd::Law LawOrThrow(const char* name) {
  Require(name != nullptr, "null law");
  auto law = nfgd::ParseLaw(name);
  if (!law) throw ArgumentError{std::string("unknown law '") + name + "'"};
  return *law;
}

}  // namespace

nfgd_status nfgd_verify(const nfgd_verify_options* options, char** report, int* violated) {
  return Guard([&] {
    Require(options && report, "null argument");
    nfgd::VerifyOptions o;
    o.law = LawOrThrow(options->law);
    Require(options->trials > 0, "trials must be positive");
    Require(options->players == 0 || options->players >= 2, "players must be at least 2");
    Require(options->strategies == 0 || options->strategies >= 2, "strategies must be at least 2");
    o.trials = options->trials;
    o.seed = options->seed;
    if (options->players) o.generator.players = options->players;
    if (options->strategies) o.generator.strategies = options->strategies;
    o.exact = options->exact != 0;
    o.minimize = options->minimize != 0;
    nfgd::VerifyResult result = nfgd::RunLaw(o);
    if (violated) *violated = result.failed_trial.has_value();
    *report = Copy(nfgd::FormatVerifyResult(o, result));
  });
}

nfgd_status nfgd_verify_replay(const char* law, const nfgd_doc* doc, int exact, char** report, int* violated) {
  return Guard([&] {
    Require(doc && report, "null argument");
    nfgd::Law l = LawOrThrow(law);
    const auto* d = std::get_if<GameDocument<Rational>>(&doc->doc);
    Require(d != nullptr, "replay needs an exact document");
    nfgd::CheckOutcome outcome = nfgd::ReplayInstance(l, nfgd::InstanceFromDocument(l, *d), exact != 0);
    if (violated) *violated = !outcome.ok;
    std::string text = std::string("law ") + law + ": replay " +
                       (outcome.ok ? std::string("pass") : "FAIL: " + outcome.detail) + "\n";
    *report = Copy(text);
  });
}

}  // extern "C"
