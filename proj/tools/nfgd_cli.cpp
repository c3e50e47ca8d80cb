#include <nfgd/nfgd.h>

#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

struct Failure {
  nfgd_status status;
};

void Check(nfgd_status status) {
  if (status != NFGD_OK) throw Failure{status};
}

struct DocDeleter {
  void operator()(nfgd_doc* d) const { nfgd_doc_free(d); }
};
struct DecompDeleter {
  void operator()(nfgd_decomp* d) const { nfgd_decomp_free(d); }
};
struct StringDeleter {
  void operator()(char* s) const { nfgd_string_free(s); }
};
using Doc = std::unique_ptr<nfgd_doc, DocDeleter>;
using Decomp = std::unique_ptr<nfgd_decomp, DecompDeleter>;
using Text = std::unique_ptr<char, StringDeleter>;

struct Globals {
  bool exact = true;
  bool use_float = false;
  std::uint64_t seed = 0;
};

struct Parameters {
  std::vector<std::string> mu;
  std::vector<std::string> gamma;
  std::vector<std::string> generator;

  void Register(CLI::App* cmd) {
    cmd->add_option("--mu", mu, "override mu, e.g. \"row 1 2\"");
    cmd->add_option("--gamma", gamma, "override gamma, e.g. \"col uniform\"");
    cmd->add_option("--generator", generator, "override gamma by a generator, e.g. \"row 1 1/3\"");
  }
};

Doc Load(const std::string& path, const Parameters* params, const Globals& globals) {
  nfgd_doc* raw = nullptr;
  Check(nfgd_doc_load(path.c_str(), &raw));
  Doc doc(raw);
  if (params) {
    auto apply = [&](const char* keyword, const std::vector<std::string>& statements) {
      for (const auto& s : statements) {
        std::string line = std::string(keyword) + " " + s;
        Check(nfgd_doc_override(doc.get(), line.c_str()));
      }
    };
    apply("mu", params->mu);
    apply("gamma", params->gamma);
    apply("generator", params->generator);
  }
  if (globals.use_float) Check(nfgd_doc_set_mode(doc.get(), NFGD_FLOAT));
  return doc;
}

std::string Serialize(const nfgd_doc* doc) {
  char* raw = nullptr;
  Check(nfgd_doc_serialize(doc, &raw));
  return Text(raw).get();
}

void Emit(const nfgd_doc* doc, const std::string& out) {
  if (out.empty()) {
    std::fputs(Serialize(doc).c_str(), stdout);
  } else {
    Check(nfgd_doc_save(doc, out.c_str()));
  }
}

Doc Owned(nfgd_doc* raw) { return Doc(raw); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompose finite normal-form games into nonstrategic, potential and harmonic parts"};
  app.require_subcommand(1);
  Globals globals;
  bool exact_flag = false;
  auto* exact_opt = app.add_flag("--exact", exact_flag, "exact rational arithmetic (default)");
  app.add_flag("--float", globals.use_float, "double precision with tolerance 1e-9")->excludes(exact_opt);
  app.add_option("--seed", globals.seed, "default seed for verify");

  Parameters decompose_params;
  std::string decompose_game;
  std::string decompose_out;
  auto* decompose = app.add_subcommand("decompose", "write the three components, phi and a report");
  decompose->add_option("game", decompose_game, "game document")->required();
  decompose->add_option("--out", decompose_out, "output directory");
  decompose_params.Register(decompose);

  Parameters classify_params;
  std::string classify_game;
  auto* classify = app.add_subcommand("classify", "report class membership");
  classify->add_option("game", classify_game, "game document")->required();
  classify_params.Register(classify);

  Parameters transform_params;
  std::string transform_game;
  std::string op;
  std::string player;
  std::vector<std::string> order;
  std::string translation;
  std::vector<std::string> beta;
  std::string strategy;
  std::string label;
  std::string lambda = "1/2";
  std::string remove;
  std::string keep;
  std::string alpha;
  std::string transform_out;
  auto* transform = app.add_subcommand("transform", "apply a game transformation");
  transform->add_option("game", transform_game, "game document")->required();
  transform->add_option("--op", op, "transformation")
      ->required()
      ->check(CLI::IsMember({"permute", "translate", "scale", "extend", "reduce", "reduce-redundant"}));
  transform->add_option("--player", player, "player acted on");
  transform->add_option("--order", order, "permute: labels in their new order");
  transform->add_option("--translation", translation, "translate: nonstrategic game document");
  transform->add_option("--beta", beta, "scale: gamma or generator statement, e.g. \"generator row 1 3\"");
  transform->add_option("--strategy", strategy, "extend: strategy to duplicate");
  transform->add_option("--label", label, "extend: label of the copy");
  transform->add_option("--lambda", lambda, "extend: share of mu moved to the copy");
  transform->add_option("--remove", remove, "reduce: strategy removed");
  transform->add_option("--keep", keep, "reduce: duplicate kept");
  transform->add_option("--alpha", alpha, "reduce-redundant: mixture weights over remaining strategies");
  transform->add_option("--out", transform_out, "output file");
  transform_params.Register(transform);

  Parameters eq_params;
  std::string eq_game;
  std::string profile;
  auto* check_eq = app.add_subcommand("check-eq", "best-response epsilon of a named profile");
  check_eq->add_option("game", eq_game, "game document")->required();
  check_eq->add_option("--profile", profile, "profile name")->required();
  eq_params.Register(check_eq);

  Parameters closest_params;
  std::string closest_game;
  std::string closest_out;
  auto* closest = app.add_subcommand("closest-potential", "closest potential game and epsilon bound");
  closest->add_option("game", closest_game, "game document")->required();
  closest->add_option("--out", closest_out, "output file");
  closest_params.Register(closest);

  std::string law;
  int trials = 100;
  std::uint64_t verify_seed = 0;
  int players = 0;
  int strategies = 0;
  bool no_minimize = false;
  std::string replay;
  auto* verify = app.add_subcommand("verify", "check a law on seeded random instances");
  verify->add_option("law", law, std::string("one of: ") + nfgd_law_names())->required();
  verify->add_option("--trials", trials, "number of instances")->check(CLI::PositiveNumber);
  auto* seed_opt = verify->add_option("--seed", verify_seed, "random seed");
  verify->add_option("--players", players, "players per instance")->check(CLI::Range(2, 8));
  verify->add_option("--strategies", strategies, "strategies per player")->check(CLI::Range(2, 8));
  verify->add_flag("--no-minimize", no_minimize, "report the raw failing instance");
  verify->add_option("--replay", replay, "re-check a counterexample document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  globals.exact = !globals.use_float;

  try {
    if (*decompose) {
      Doc doc = Load(decompose_game, &decompose_params, globals);
      nfgd_decomp* raw = nullptr;
      Check(nfgd_decompose(doc.get(), &raw));
      Decomp parts(raw);
      char* report_raw = nullptr;
      Check(nfgd_decomp_report(parts.get(), &report_raw));
      Text report(report_raw);
      const std::pair<nfgd_component, const char*> components[] = {
          {NFGD_NONSTRATEGIC, "nonstrategic"},
          {NFGD_POTENTIAL, "potential"},
          {NFGD_HARMONIC, "harmonic"},
          {NFGD_PHI, "phi"},
      };
      if (!decompose_out.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(decompose_out, ec);
        if (ec) {
          std::fprintf(stderr, "error: cannot create '%s': %s\n", decompose_out.c_str(), ec.message().c_str());
          return kExitInput;
        }
      }
      std::fputs(report.get(), stdout);
      for (const auto& [which, name] : components) {
        nfgd_doc* part = nullptr;
        Check(nfgd_decomp_component(parts.get(), which, &part));
        Doc owned = Owned(part);
        if (decompose_out.empty()) {
          std::printf("\n");
          Emit(owned.get(), "");
        } else {
          auto path = std::filesystem::path(decompose_out) / (std::string(name) + ".game");
          Emit(owned.get(), path.string());
        }
      }
      if (!decompose_out.empty()) {
        auto path = std::filesystem::path(decompose_out) / "report.txt";
        if (std::FILE* f = std::fopen(path.string().c_str(), "w")) {
          std::fputs(report.get(), f);
          std::fclose(f);
        } else {
          std::fprintf(stderr, "error: cannot write '%s'\n", path.string().c_str());
          return kExitInput;
        }
      }
      return kExitOk;
    }

    if (*classify) {
      Doc doc = Load(classify_game, &classify_params, globals);
      char* raw = nullptr;
      Check(nfgd_classify(doc.get(), &raw));
      std::fputs(Text(raw).get(), stdout);
      return kExitOk;
    }

    if (*transform) {
      Doc doc = Load(transform_game, &transform_params, globals);
      auto need = [&](const std::string& value, const char* flag) {
        if (value.empty()) {
          std::fprintf(stderr, "error: --op %s requires %s\n", op.c_str(), flag);
          throw Failure{NFGD_ERR_ARGUMENT};
        }
      };
      nfgd_doc* raw = nullptr;
      if (op == "permute") {
        need(player, "--player");
        std::vector<const char*> labels;
        for (const auto& l : order) labels.push_back(l.c_str());
        Check(nfgd_permute(doc.get(), player.c_str(), labels.data(), labels.size(), &raw));
      } else if (op == "translate") {
        need(translation, "--translation");
        Doc by = Load(translation, nullptr, globals);
        Check(nfgd_translate(doc.get(), by.get(), &raw));
      } else if (op == "scale") {
        std::string statements;
        for (const auto& b : beta) statements += b + "\n";
        Check(nfgd_scale(doc.get(), statements.c_str(), &raw));
      } else if (op == "extend") {
        need(player, "--player");
        need(strategy, "--strategy");
        need(label, "--label");
        Check(nfgd_extend(doc.get(), player.c_str(), strategy.c_str(), label.c_str(), lambda.c_str(), &raw));
      } else if (op == "reduce") {
        need(player, "--player");
        need(remove, "--remove");
        need(keep, "--keep");
        Check(nfgd_reduce(doc.get(), player.c_str(), remove.c_str(), keep.c_str(), &raw));
      } else {
        need(player, "--player");
        need(remove, "--remove");
        need(alpha, "--alpha");
        Check(nfgd_reduce_redundant(doc.get(), player.c_str(), remove.c_str(), alpha.c_str(), &raw));
      }
      Doc out = Owned(raw);
      Emit(out.get(), transform_out);
      return kExitOk;
    }

    if (*check_eq) {
      Doc doc = Load(eq_game, &eq_params, globals);
      char* raw = nullptr;
      int is_nash = 0;
      Check(nfgd_check_eq(doc.get(), profile.c_str(), &raw, &is_nash));
      std::fputs(Text(raw).get(), stdout);
      return kExitOk;
    }

    if (*closest) {
      Doc doc = Load(closest_game, &closest_params, globals);
      nfgd_doc* raw = nullptr;
      Check(nfgd_closest_potential(doc.get(), &raw));
      Doc out = Owned(raw);
      Emit(out.get(), closest_out);
      return kExitOk;
    }

    if (*verify) {
      char* raw = nullptr;
      int violated = 0;
      if (!replay.empty()) {
        Doc doc = Load(replay, nullptr, Globals{});
        Check(nfgd_verify_replay(law.c_str(), doc.get(), globals.exact, &raw, &violated));
      } else {
        nfgd_verify_options options;
        nfgd_verify_defaults(&options);
        options.law = law.c_str();
        options.trials = trials;
        options.seed = seed_opt->count() ? verify_seed : globals.seed;
        options.players = players;
        options.strategies = strategies;
        options.exact = globals.exact;
        options.minimize = !no_minimize;
        Check(nfgd_verify(&options, &raw, &violated));
      }
      std::fputs(Text(raw).get(), stdout);
      return violated ? kExitViolation : kExitOk;
    }
  } catch (const Failure& f) {
    const char* message = nfgd_last_error();
    if (*message) std::fprintf(stderr, "error: %s\n", message);
    return kExitInput;
  }
  return kExitInput;
}
