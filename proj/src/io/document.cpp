#include "io/document.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "core/inner_product.hpp"

namespace nfgd {
namespace {

struct Statement {
  int line = 0;
  std::vector<std::string> tokens;
};

class Located {
 public:
  Located(const char* unit, int line) : unit_(unit), line_(line) {}

  [[noreturn]] void Error(const std::string& message) const {
    Fail(ErrorKind::kParse, std::string(unit_) + " " + std::to_string(line_) + ": " + message);
  }
  [[noreturn]] void FieldError(std::size_t field, const std::string& message) const {
    Fail(ErrorKind::kParse, std::string(unit_) + " " + std::to_string(line_) + ", field " +
                                std::to_string(field + 1) + ": " + message);
  }

 private:
  const char* unit_;
  int line_;
};

// Whole-line comments are collected into `comments` when given.
std::vector<Statement> Tokenize(std::string_view text, std::vector<std::string>* comments = nullptr) {
  std::vector<Statement> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      if (comments && line.find_first_not_of(" \t") == hash) {
        std::size_t first = line.find_first_not_of(" \t", hash + 1);
        std::size_t last = line.find_last_not_of(" \t\r");
        comments->push_back(first == std::string::npos ? "" : line.substr(first, last - first + 1));
      }
      line.erase(hash);
    }
    std::string spaced;
    for (char c : line) {
      if (c == '|') {
        spaced += " | ";
      } else {
        spaced += c;
      }
    }
    std::istringstream in(spaced);
    Statement st{line_no, {}};
    std::string token;
    while (in >> token) st.tokens.push_back(token);
    if (!st.tokens.empty()) out.push_back(std::move(st));
    if (end == text.size()) break;
  }
  return out;
}

class StatementReader {
 public:
  StatementReader(const SpacePtr& space, const char* unit) : space_(space), unit_(unit) {}

  Located At(const Statement& st) const { return Located(unit_, st.line); }

  int Player(const Statement& st) const {
    if (st.tokens.size() < 2) At(st).Error("'" + st.tokens[0] + "' needs a player name");
    auto player = space_->FindPlayer(st.tokens[1]);
    if (!player) At(st).FieldError(1, "unknown player '" + st.tokens[1] + "'");
    return *player;
  }

  std::vector<Rational> Numbers(const Statement& st, std::size_t from, std::size_t expected,
                                const std::string& what) const {
    std::size_t got = st.tokens.size() > from ? st.tokens.size() - from : 0;
    if (got != expected) {
      At(st).Error(what + " expects " + std::to_string(expected) + " entries, got " +
                   std::to_string(got));
    }
    std::vector<Rational> out;
    for (std::size_t k = from; k < st.tokens.size(); ++k) {
      Rational value;
      if (!TryParseRational(st.tokens[k], &value)) {
        At(st).FieldError(k, "expected a rational number, got '" + st.tokens[k] + "'");
      }
      out.push_back(value);
    }
    return out;
  }

  void RequirePositive(const Statement& st, const std::vector<Rational>& values, std::size_t from,
                       const char* what) const {
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (sgn(values[k]) <= 0) {
        At(st).FieldError(from + k, std::string("nonpositive ") + what + " " + values[k].get_str());
      }
    }
  }

  std::vector<Rational> Mu(const Statement& st, int player) const {
    auto values = Numbers(st, 2, space_->num_strategies(player),
                          "mu for player '" + space_->player_name(player) + "'");
    RequirePositive(st, values, 2, "measure");
    return values;
  }

  std::vector<Rational> Gamma(const Statement& st, int player) const {
    if (st.tokens.size() == 3 && st.tokens[2] == "uniform") {
      return std::vector<Rational>(space_->num_subprofiles(player), Rational(1));
    }
    auto values = Numbers(st, 2, space_->num_subprofiles(player),
                          "gamma for player '" + space_->player_name(player) + "'");
    RequirePositive(st, values, 2, "co-measure");
    return values;
  }

  std::vector<Rational> Generator(const Statement& st, int player) const {
    auto values = Numbers(st, 2, space_->num_strategies(player),
                          "generator for player '" + space_->player_name(player) + "'");
    RequirePositive(st, values, 2, "generator");
    return values;
  }

 private:
  SpacePtr space_;
  const char* unit_;
};

// Collects gamma/generator statements and assembles a co-measure vector.
class CoMeasureBuilder {
 public:
  explicit CoMeasureBuilder(const SpacePtr& space) : space_(space) {}

  void AddGamma(const Located& at, int player, std::vector<Rational> values) {
    if (gamma_.count(player)) at.Error("duplicate gamma for player '" + space_->player_name(player) + "'");
    gamma_[player] = std::move(values);
    last_ = at;
  }
  void AddGenerator(const Located& at, int player, std::vector<Rational> values) {
    if (generator_.count(player)) {
      at.Error("duplicate generator for player '" + space_->player_name(player) + "'");
    }
    generator_[player] = std::move(values);
    last_ = at;
  }
  bool empty() const { return gamma_.empty() && generator_.empty(); }

  // `base` supplies the tensors of players without a gamma statement.
  CoMeasureVector<Rational> Build(const CoMeasureVector<Rational>& base) const {
    if (!generator_.empty()) {
      if (!gamma_.empty()) last_->Error("gamma and generator statements cannot be mixed");
      std::vector<Tensor<Rational>> c;
      for (int i = 0; i < space_->num_players(); ++i) {
        auto it = generator_.find(i);
        if (it == generator_.end()) {
          last_->Error("generator missing for player '" + space_->player_name(i) + "'");
        }
        c.push_back(it->second);
      }
      return CoMeasureVector<Rational>::FromGenerator(space_, std::move(c));
    }
    auto values = base.values();
    for (const auto& [player, tensor] : gamma_) values[player] = tensor;
    if (gamma_.empty()) return base;
    return CoMeasureVector<Rational>(space_, std::move(values));
  }

 private:
  SpacePtr space_;
  std::map<int, std::vector<Rational>> gamma_;
  std::map<int, std::vector<Rational>> generator_;
  std::optional<Located> last_;
};

void ExpectHeader(const std::vector<Statement>& statements) {
  if (statements.empty()) Fail(ErrorKind::kParse, "line 1: empty document");
  const Statement& st = statements.front();
  Located at("line", st.line);
  if (st.tokens[0] != kFormatMagic) {
    at.Error(std::string("expected header '") + kFormatMagic + " " + std::to_string(kFormatVersion) + "'");
  }
  if (st.tokens.size() != 2) at.Error("header needs exactly one version number");
  if (st.tokens[1] != std::to_string(kFormatVersion)) {
    at.FieldError(1, "unsupported format version '" + st.tokens[1] + "'");
  }
}

template <typename T>
void WriteValues(std::ostream& out, const Tensor<T>& values) {
  for (const auto& v : values) out << ' ' << FormatScalar(v);
}

template <typename T>
bool AllOnes(const Tensor<T>& values) {
  for (const auto& v : values) {
    if (!(v == T(1))) return false;
  }
  return true;
}

}  // namespace

GameDocument<Rational> ParseGameDocument(std::string_view text) {
  std::vector<std::string> comments;
  std::vector<Statement> statements = Tokenize(text, &comments);
  ExpectHeader(statements);

  std::size_t k = 1;
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> labels;
  int first_player_line = statements.size() > 1 ? statements[1].line : statements[0].line;
  for (; k < statements.size() && statements[k].tokens[0] == "player"; ++k) {
    const Statement& st = statements[k];
    if (st.tokens.size() < 2) Located("line", st.line).Error("player statement needs a name");
    names.push_back(st.tokens[1]);
    labels.emplace_back(st.tokens.begin() + 2, st.tokens.end());
  }
  SpacePtr space;
  try {
    space = StrategySpace::Make(names, labels);
  } catch (const Error& e) {
    Located("line", first_player_line).Error(e.what());
  }

  StatementReader reader(space, "line");
  std::map<int, std::vector<Rational>> payoffs;
  std::map<int, std::vector<Rational>> mu;
  CoMeasureBuilder gamma(space);
  GameDocument<Rational> doc;
  int first_payoff_line = 0;

  for (; k < statements.size(); ++k) {
    const Statement& st = statements[k];
    const std::string& keyword = st.tokens[0];
    Located at = reader.At(st);
    if (keyword == "player") {
      at.Error("player statements must come right after the header");
    } else if (keyword == "payoff") {
      int i = reader.Player(st);
      if (payoffs.count(i)) at.Error("duplicate payoff for player '" + space->player_name(i) + "'");
      payoffs[i] = reader.Numbers(st, 2, space->num_profiles(),
                                  "payoff for player '" + space->player_name(i) + "'");
      if (first_payoff_line == 0) first_payoff_line = st.line;
    } else if (keyword == "mu") {
      int i = reader.Player(st);
      if (mu.count(i)) at.Error("duplicate mu for player '" + space->player_name(i) + "'");
      mu[i] = reader.Mu(st, i);
    } else if (keyword == "gamma") {
      int i = reader.Player(st);
      gamma.AddGamma(at, i, reader.Gamma(st, i));
    } else if (keyword == "generator") {
      int i = reader.Player(st);
      gamma.AddGenerator(at, i, reader.Generator(st, i));
    } else if (keyword == "profile" || keyword == "field") {
      if (st.tokens.size() < 2) at.Error("'" + keyword + "' needs a name");
      const std::string& name = st.tokens[1];
      if (keyword == "field") {
        for (const auto& [existing, _] : doc.fields) {
          if (existing == name) at.Error("duplicate field '" + name + "'");
        }
        auto values = reader.Numbers(st, 2, space->num_profiles(), "field '" + name + "'");
        doc.fields.emplace_back(name, ScalarField<Rational>(space, std::move(values)));
        continue;
      }
      for (const auto& [existing, _] : doc.profiles) {
        if (existing == name) at.Error("duplicate profile '" + name + "'");
      }
      std::vector<Tensor<Rational>> groups(1);
      for (std::size_t f = 2; f < st.tokens.size(); ++f) {
        if (st.tokens[f] == "|") {
          groups.emplace_back();
          continue;
        }
        Rational value;
        if (!TryParseRational(st.tokens[f], &value)) {
          at.FieldError(f, "expected a rational number, got '" + st.tokens[f] + "'");
        }
        groups.back().push_back(value);
      }
      if (static_cast<int>(groups.size()) != space->num_players()) {
        at.Error("profile '" + name + "' needs " + std::to_string(space->num_players()) +
                 " '|'-separated groups, got " + std::to_string(groups.size()));
      }
      MixedProfile<Rational> x(space, std::move(groups));
      try {
        x.Validate();
      } catch (const Error& e) {
        at.Error("profile '" + name + "': " + e.what());
      }
      doc.profiles.emplace_back(name, std::move(x));
    } else {
      at.FieldError(0, "unknown statement '" + keyword + "'");
    }
  }

  std::vector<Tensor<Rational>> payoff_tensors;
  if (payoffs.empty() && !doc.fields.empty()) {
    doc.game = Game<Rational>(space);
  } else {
    for (int i = 0; i < space->num_players(); ++i) {
      auto it = payoffs.find(i);
      if (it == payoffs.end()) {
        Fail(ErrorKind::kParse, "missing payoff for player '" + space->player_name(i) + "' (expected " +
                                    std::to_string(space->num_profiles()) + " entries)");
      }
      payoff_tensors.push_back(it->second);
    }
    doc.game = Game<Rational>(space, std::move(payoff_tensors));
  }
  auto mu_base = MeasureVector<Rational>::Uniform(space).weights();
  for (const auto& [i, w] : mu) mu_base[i] = w;
  doc.mu = MeasureVector<Rational>(space, std::move(mu_base));
  doc.gamma = gamma.Build(CoMeasureVector<Rational>::Uniform(space));
  ValidateParameters(space, doc.mu, doc.gamma);
  doc.comments = std::move(comments);
  return doc;
}

void ApplyParameterOverrides(GameDocument<Rational>& doc, const std::vector<std::string>& lines) {
  const SpacePtr& space = doc.game.space_ptr();
  StatementReader reader(space, "override");
  auto weights = doc.mu.weights();
  CoMeasureBuilder gamma(space);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto statements = Tokenize(lines[n]);
    if (statements.empty()) continue;
    Statement st = statements.front();
    st.line = static_cast<int>(n + 1);
    Located at = reader.At(st);
    if (statements.size() > 1) at.Error("one statement per override");
    const std::string& keyword = st.tokens[0];
    int i = reader.Player(st);
    if (keyword == "mu") {
      weights[i] = reader.Mu(st, i);
    } else if (keyword == "gamma") {
      gamma.AddGamma(at, i, reader.Gamma(st, i));
    } else if (keyword == "generator") {
      gamma.AddGenerator(at, i, reader.Generator(st, i));
    } else {
      at.FieldError(0, "expected mu, gamma or generator, got '" + keyword + "'");
    }
  }
  doc.mu = MeasureVector<Rational>(space, std::move(weights));
  if (!gamma.empty()) doc.gamma = gamma.Build(doc.gamma);
  ValidateParameters(space, doc.mu, doc.gamma);
}

CoMeasureVector<Rational> ParseCoMeasureStatements(const SpacePtr& space,
                                                   const std::vector<std::string>& lines) {
  StatementReader reader(space, "statement");
  CoMeasureBuilder builder(space);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto statements = Tokenize(lines[n]);
    if (statements.empty()) continue;
    Statement st = statements.front();
    st.line = static_cast<int>(n + 1);
    Located at = reader.At(st);
    int i = reader.Player(st);
    if (st.tokens[0] == "gamma") {
      builder.AddGamma(at, i, reader.Gamma(st, i));
    } else if (st.tokens[0] == "generator") {
      builder.AddGenerator(at, i, reader.Generator(st, i));
    } else {
      at.FieldError(0, "expected gamma or generator, got '" + st.tokens[0] + "'");
    }
  }
  return builder.Build(CoMeasureVector<Rational>::Uniform(space));
}

template <typename T>
std::string SerializeGameDocument(const GameDocument<T>& doc) {
  const StrategySpace& space = doc.game.space();
  std::ostringstream out;
  out << kFormatMagic << ' ' << kFormatVersion << '\n';
  for (const auto& c : doc.comments) out << "# " << c << '\n';
  for (int i = 0; i < space.num_players(); ++i) {
    out << "player " << space.player_name(i);
    for (const auto& label : space.labels(i)) out << ' ' << label;
    out << '\n';
  }
  for (int i = 0; i < space.num_players(); ++i) {
    out << "payoff " << space.player_name(i);
    WriteValues(out, doc.game.payoff(i));
    out << '\n';
  }
  for (int i = 0; i < space.num_players(); ++i) {
    out << "mu " << space.player_name(i);
    WriteValues(out, doc.mu.weights(i));
    out << '\n';
  }
  for (int i = 0; i < space.num_players(); ++i) {
    if (doc.gamma.generator()) {
      out << "generator " << space.player_name(i);
      WriteValues(out, (*doc.gamma.generator())[i]);
    } else {
      out << "gamma " << space.player_name(i);
      if (AllOnes(doc.gamma.values(i))) {
        out << " uniform";
      } else {
        WriteValues(out, doc.gamma.values(i));
      }
    }
    out << '\n';
  }
  for (const auto& [name, x] : doc.profiles) {
    out << "profile " << name;
    for (int i = 0; i < space.num_players(); ++i) {
      if (i > 0) out << " |";
      WriteValues(out, x.probabilities(i));
    }
    out << '\n';
  }
  for (const auto& [name, f] : doc.fields) {
    out << "field " << name;
    WriteValues(out, f.values());
    out << '\n';
  }
  return out.str();
}

template <typename T>
GameDocument<T> ConvertDocument(const GameDocument<Rational>& doc) {
  GameDocument<T> out;
  out.game = ConvertGame<T>(doc.game);
  out.mu = ConvertMeasure<T>(doc.mu);
  out.gamma = ConvertCoMeasure<T>(doc.gamma);
  for (const auto& [name, x] : doc.profiles) out.profiles.emplace_back(name, ConvertProfile<T>(x));
  for (const auto& [name, f] : doc.fields) out.fields.emplace_back(name, ConvertField<T>(f));
  out.comments = doc.comments;
  return out;
}

template <typename T>
GameDocument<T> MakeDocument(const Game<T>& game) {
  GameDocument<T> doc;
  doc.game = game;
  doc.mu = MeasureVector<T>::Uniform(game.space_ptr());
  doc.gamma = CoMeasureVector<T>::Uniform(game.space_ptr());
  return doc;
}

const MixedProfile<Rational>& FindProfile(const GameDocument<Rational>& doc, std::string_view name) {
  for (const auto& [n, x] : doc.profiles) {
    if (n == name) return x;
  }
  Fail(ErrorKind::kValidation, "no profile named '" + std::string(name) + "'");
}

template std::string SerializeGameDocument<Rational>(const GameDocument<Rational>&);
template std::string SerializeGameDocument<double>(const GameDocument<double>&);
template GameDocument<Rational> ConvertDocument<Rational>(const GameDocument<Rational>&);
template GameDocument<double> ConvertDocument<double>(const GameDocument<Rational>&);
template GameDocument<Rational> MakeDocument<Rational>(const Game<Rational>&);
template GameDocument<double> MakeDocument<double>(const Game<double>&);

}  // namespace nfgd
