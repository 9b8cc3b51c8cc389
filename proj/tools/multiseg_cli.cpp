// Copyright 2026 The multiseg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// multiseg: command-line front end.
//
// Exit codes: 0 success / hypothesis holds, 1 counterexample found,
// 2 usage or parse error, 3 internal invariant violation.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multiseg/json.hpp"
#include "multiseg/multiseg.hpp"

namespace {

using multiseg::json;

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Output {
 public:
  explicit Output(bool as_json)
      : as_json_(as_json), start_(std::chrono::steady_clock::now()) {}

  bool json_mode() const { return as_json_; }

  // In JSON mode prints {input, result, witness?, elapsed_ms}; otherwise
  // prints the human-readable text.
  void emit(const json& input, const json& result,
            const std::optional<json>& witness, const std::string& text) const {
    if (!as_json_) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    json out;
    out["input"] = input;
    out["result"] = result;
    if (witness) out["witness"] = *witness;
    out["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
    std::cout << out.dump(2) << '\n';
  }

 private:
  bool as_json_;
  std::chrono::steady_clock::time_point start_;
};

std::string read_input(const std::string& arg) {
  if (!arg.empty()) return arg;
  std::string all((std::istreambuf_iterator<char>(std::cin)),
                  std::istreambuf_iterator<char>());
  return all;
}

multiseg::Multisegment read_multisegment(const std::string& arg) {
  return multiseg::parse_multisegment(read_input(arg));
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_speh(const Output& out, const std::string& arg) {
  auto m = read_multisegment(arg);
  auto witness = multiseg::is_speh_type(m);
  std::string text = "input: " + multiseg::format(m) + "\nspeh: " + yes_no(witness.has_value());
  if (witness) text += "\nwitness n: " + multiseg::format(*witness);
  out.emit(multiseg::format(m), json{{"speh", witness.has_value()}},
           witness ? std::optional<json>(json(*witness)) : std::nullopt, text);
  return kOk;
}

int cmd_dual(const Output& out, const std::string& arg) {
  auto m = read_multisegment(arg);
  auto d = multiseg::dual(m);
  out.emit(multiseg::format(m), json(d), std::nullopt, multiseg::format(d));
  return kOk;
}

int cmd_involution(const Output& out, const std::string& arg, bool recursive) {
  auto m = read_multisegment(arg);
  auto general = multiseg::zelevinsky_dual(m);
  auto ladder = multiseg::as_ladder(m);
  if (recursive && !ladder) {
    throw multiseg::NotALadder("--recursive requires a ladder");
  }
  if (ladder) {
    auto rec = multiseg::ladder_dual_recursive(*ladder);
    if (rec.to_multisegment() != general) {
      throw InternalError("involution mismatch: general " + multiseg::format(general) +
                          " vs ladder recursion " + multiseg::format(rec.to_multisegment()));
    }
  }
  json result = general;
  json witness = json{{"cross_checked_with_ladder_recursion", ladder.has_value()}};
  out.emit(multiseg::format(m), result, witness, multiseg::format(general));
  return kOk;
}

int cmd_orders(const Output& out, const std::string& arg, bool canonical_only) {
  auto m = read_multisegment(arg);
  std::vector<multiseg::OrderedMultisegment> orders;
  if (canonical_only) {
    orders.push_back(multiseg::canonical_order(m));
  } else {
    auto stream = multiseg::standard_orders(m);
    while (auto o = stream.next()) orders.push_back(std::move(*o));
  }
  std::string text;
  for (const auto& o : orders) text += multiseg::format(o) + "\n";
  json result = canonical_only ? json(orders.front()) : json(orders);
  out.emit(multiseg::format(m), result, std::nullopt, text);
  return kOk;
}

int cmd_distinguished(const Output& out, const std::string& arg) {
  auto m = read_multisegment(arg);
  auto verdict = multiseg::is_distinguished(m, true);
  std::string text = "distinguished: " + std::string(yes_no(verdict.distinguished)) +
                     "\norders checked: " + std::to_string(verdict.orders_checked);
  json witness;
  if (verdict.distinguished) {
    witness = json{{"witnesses", verdict.witnesses}};
  } else {
    witness = json{{"failing_order", *verdict.failing_order}};
    text += "\nfailing order: " + multiseg::format(*verdict.failing_order);
  }
  out.emit(multiseg::format(m),
           json{{"distinguished", verdict.distinguished},
                {"orders_checked", verdict.orders_checked}},
           witness, text);
  return kOk;
}

int cmd_hypothesis(const Output& out, const std::string& arg, multiseg::HypothesisMode mode) {
  auto m = read_multisegment(arg);
  auto v = multiseg::check_hypothesis(m, mode);
  json result{{"mode", multiseg::to_string(mode)},
              {"verdict", v.holds ? "Holds" : "Counterexample"},
              {"distinguished", v.distinguished},
              {"speh", v.speh_witness.has_value()}};
  if (v.dual_distinguished) result["dual_distinguished"] = *v.dual_distinguished;
  json witness = json::object();
  if (v.speh_witness) witness["speh_witness"] = *v.speh_witness;
  if (v.failing_order) witness["failing_order"] = *v.failing_order;
  if (v.dual_failing_order) witness["dual_failing_order"] = *v.dual_failing_order;
  std::string text = std::string(v.holds ? "Holds" : "Counterexample") +
                     "\ndistinguished: " + yes_no(v.distinguished) +
                     "\nspeh: " + yes_no(v.speh_witness.has_value());
  if (v.dual_distinguished) {
    text += "\ndual distinguished: " + std::string(yes_no(*v.dual_distinguished));
  }
  out.emit(multiseg::format(m), result, witness, text);
  return v.holds ? kOk : kCounterexample;
}

int cmd_search(const Output& out, const multiseg::SearchBounds& bounds) {
  auto report = multiseg::search_counterexamples(bounds);
  json input = bounds;
  input["shards"] = bounds.shards;
  std::ostringstream text;
  text << "checked: " << report.checked << "\n"
       << "distinguished: " << report.distinguished << "\n"
       << "speh: " << report.speh << "\n"
       << report.counterexamples.size() << " counterexamples\n"
       << report.strong_form_violations.size() << " strong-form violations\n";
  for (const auto& c : report.counterexamples) {
    text << "counterexample: " << multiseg::format(c.m)
         << (c.dual_of_earlier ? " (dual of an earlier one)" : "") << "\n";
  }
  for (const auto& v : report.strong_form_violations) {
    text << "strong-form violation: " << multiseg::format(v.m) << "\n";
  }
  out.emit(input, multiseg::search_result_json(report), std::nullopt, text.str());
  return report.counterexamples.empty() ? kOk : kCounterexample;
}

int cmd_ladder_classify(const Output& out, const std::string& arg, multiseg::Int d) {
  auto m = read_multisegment(arg);
  json result;
  std::ostringstream text;
  auto ladder = multiseg::as_ladder(m);
  result["is_ladder"] = ladder.has_value();
  text << "ladder: " << yes_no(ladder.has_value()) << "\n";
  if (ladder) {
    auto parts = multiseg::proper_parts(*ladder);
    auto dual = multiseg::zelevinsky_dual(*ladder);
    auto kt = multiseg::klyachko_type(*ladder, d);
    result["is_proper"] = ladder->is_proper();
    result["proper_parts"] = parts;
    result["dual"] = dual;
    result["sp_L"] = multiseg::sp_distinguished_L(*ladder);
    result["sp_Z"] = multiseg::sp_distinguished_Z(dual);
    result["z_sp_distinguished"] = multiseg::sp_distinguished_Z(*ladder);
    result["klyachko"] = kt ? json(*kt) : json(nullptr);
    text << "proper: " << yes_no(ladder->is_proper()) << "\n"
         << "proper parts: ";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      text << (i ? " " : "") << multiseg::format(parts[i]);
    }
    text << "\n"
         << "dual: " << multiseg::format(dual) << "\n"
         << "sp_L: " << yes_no(multiseg::sp_distinguished_L(*ladder)) << "\n"
         << "sp_Z (dual data): " << yes_no(multiseg::sp_distinguished_Z(dual)) << "\n";
    if (kt) {
      text << "klyachko: k=" << kt->k << " r=" << kt->r << " n=" << kt->n << "\n";
    } else {
      text << "klyachko: none\n";
    }
  }
  result["family_F"] = multiseg::in_family_F(m);
  text << "family F: " << yes_no(multiseg::in_family_F(m)) << "\n";
  json input = multiseg::format(m);
  out.emit(json{{"multisegment", input}, {"d", d}}, result, std::nullopt, text.str());
  return kOk;
}

int cmd_irreducible(const Output& out, const std::vector<std::string>& args) {
  std::vector<multiseg::Ladder> ladders;
  json input = json::array();
  for (const auto& a : args) {
    auto m = multiseg::parse_multisegment(a);
    auto l = multiseg::as_ladder(m);
    if (!l) throw multiseg::NotALadder(multiseg::format(m) + " is not a ladder");
    ladders.push_back(*l);
    input.push_back(multiseg::format(m));
  }
  json witnesses = json::array();
  std::ostringstream text;
  for (std::size_t a = 0; a < ladders.size(); ++a) {
    for (std::size_t b = 0; b < ladders.size(); ++b) {
      if (a == b) continue;
      if (auto w = multiseg::nc(ladders[a], ladders[b])) {
        witnesses.push_back(json{{"first", a + 1}, {"second", b + 1}, {"witness", *w}});
        text << "NC(" << a + 1 << "," << b + 1 << "): i=" << w->i << " j=" << w->j
             << " k=" << w->k << "\n";
      }
    }
  }
  const bool irreducible = multiseg::product_irreducible(ladders);
  json result{{"irreducible", irreducible}, {"nc_witnesses", witnesses}};
  text << "irreducible: " << yes_no(irreducible) << "\n";
  try {
    auto verdict = multiseg::product_sp_verdict(ladders);
    result["sp_verdict"] = json{{"kind", multiseg::to_string(verdict.kind)},
                                {"reason", verdict.reason}};
    text << "sp verdict: " << multiseg::to_string(verdict.kind) << " (" << verdict.reason
         << ")\n";
  } catch (const multiseg::ReducibleProduct& e) {
    result["sp_verdict"] = nullptr;
    result["sp_verdict_error"] = e.what();
    text << "sp verdict: n/a (" << e.what() << ")\n";
  }
  out.emit(input, result, std::nullopt, text.str());
  return kOk;
}

int cmd_elementary(const Output& out, const std::string& arg,
                   const std::vector<std::string>& pair) {
  auto m = read_multisegment(arg);
  auto a = multiseg::parse_segment(pair.at(0));
  auto b = multiseg::parse_segment(pair.at(1));
  auto r = multiseg::elementary_operation(m, a, b);
  out.emit(json{{"multisegment", multiseg::format(m)},
                {"pair", json::array({multiseg::to_string(a), multiseg::to_string(b)})}},
           json(r), std::nullopt, multiseg::format(r));
  return kOk;
}

unsigned default_shards() {
  if (const char* env = std::getenv("MULTISEG_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segment and multisegment combinatorics: relevance, Speh type, "
               "Zelevinsky involution, ladders, Klyachko types"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured JSON output");

  std::string msgm;
  auto add_msgm = [&](CLI::App* sub) {
    sub->add_option("multisegment", msgm, "Multisegment, e.g. \"2*[3,3]+[0,1]\" (stdin if omitted)");
    sub->add_flag("--json", as_json, "Structured JSON output");
  };

  auto* speh = app.add_subcommand("speh", "Speh-type test with witness n (m = n + νn)");
  add_msgm(speh);
  auto* dual = app.add_subcommand("dual", "Reflection m^∨");
  add_msgm(dual);

  bool recursive = false;
  auto* involution = app.add_subcommand("involution", "Zelevinsky involution m^t");
  add_msgm(involution);
  involution->add_flag("--recursive", recursive, "Require a ladder and use the ladder recursion");

  bool canonical = false;
  auto* orders = app.add_subcommand("orders", "Standard orders");
  add_msgm(orders);
  orders->add_flag("--canonical", canonical, "Only the canonical block order");

  auto* distinguished = app.add_subcommand("distinguished", "Distinguished-multisegment test");
  add_msgm(distinguished);

  std::string mode_text = "star";
  auto* hypothesis = app.add_subcommand("hypothesis", "Check the star / star_star hypothesis");
  add_msgm(hypothesis);
  hypothesis->add_option("--mode", mode_text)->check(CLI::IsMember({"star", "star_star"}));

  multiseg::SearchBounds bounds;
  bounds.shards = default_shards();
  std::string filter_text = "all";
  auto* search = app.add_subcommand("search", "Bounded counterexample search");
  search->add_option("--max-end", bounds.max_end)->required();
  search->add_option("--max-size", bounds.max_size)->required();
  search->add_option("--max-mult", bounds.max_mult)->required();
  search->add_option("--mode", mode_text)->check(CLI::IsMember({"star", "star_star"}));
  search->add_option("--filter", filter_text)
      ->check(CLI::IsMember({"all", "sets_only", "blocks_le_2"}));
  search->add_option("--shards", bounds.shards)->check(CLI::PositiveNumber);
  search->add_flag("--json", as_json, "Structured JSON output");

  multiseg::Int d = 1;
  auto* ladder = app.add_subcommand("ladder", "Ladder tools");
  ladder->require_subcommand(1);
  auto* classify = ladder->add_subcommand("classify", "Classify a ladder");
  add_msgm(classify);
  classify->add_option("--d", d)->check(CLI::PositiveNumber);

  std::vector<std::string> ladder_args;
  auto* irreducible = app.add_subcommand("irreducible", "Irreducibility of a product of ladders");
  // Ladders are collected as extras: CLI11 would split a vector argument
  // shaped like "[a,b]" at the comma.
  irreducible->allow_extras();
  irreducible->footer("Arguments: MSGM1 MSGM2 [MSGM3 ...] (at least two ladders)");
  irreducible->add_flag("--json", as_json, "Structured JSON output");

  std::vector<std::string> pair;
  auto* elementary = app.add_subcommand("elementary", "Elementary operation on a linked pair");
  add_msgm(elementary);
  elementary->add_option("--pair", pair)->required()->expected(2)->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const Output out(as_json);
  const auto mode = mode_text == "star" ? multiseg::HypothesisMode::star
                                        : multiseg::HypothesisMode::star_star;
  try {
    if (*speh) return cmd_speh(out, msgm);
    if (*dual) return cmd_dual(out, msgm);
    if (*involution) return cmd_involution(out, msgm, recursive);
    if (*orders) return cmd_orders(out, msgm, canonical);
    if (*distinguished) return cmd_distinguished(out, msgm);
    if (*hypothesis) return cmd_hypothesis(out, msgm, mode);
    if (*search) {
      bounds.mode = mode;
      bounds.filter = filter_text == "sets_only"     ? multiseg::SearchFilter::sets_only
                      : filter_text == "blocks_le_2" ? multiseg::SearchFilter::blocks_le_2
                                                     : multiseg::SearchFilter::all;
      return cmd_search(out, bounds);
    }
    if (*classify) return cmd_ladder_classify(out, msgm, d);
    if (*irreducible) {
      ladder_args = irreducible->remaining();
      if (ladder_args.size() < 2) {
        std::cerr << "irreducible: at least two ladders are required\n";
        return kUsage;
      }
      return cmd_irreducible(out, ladder_args);
    }
    if (*elementary) return cmd_elementary(out, msgm, pair);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const multiseg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
