#include "linaut/cli.hpp"

#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "linaut/border.hpp"
#include "linaut/json_io.hpp"
#include "linaut/oracle.hpp"
#include "linaut/run.hpp"
#include "linaut/schedule.hpp"
#include "linaut/synth.hpp"

namespace linaut {

namespace {

using ojson = nlohmann::ordered_json;

struct GlobalOpts {
    bool json = false;
    std::size_t budget = kDefaultBudget;
    unsigned long long seed = 0;
};

std::string word_str(const std::string& w) { return w.empty() ? "λ" : w; }

std::string presu_str(const Presu& p, bool spaced) {
    return "(" + word_str(p.prefix) + (spaced ? ", " : ",") + word_str(p.suffix) + ")";
}

ojson presu_json(const Presu& p) {
    ojson e;
    e["prefix"] = p.prefix;
    e["suffix"] = p.suffix;
    return e;
}

ojson violations_json(const ValidationReport& r) {
    ojson arr = ojson::array();
    for (const auto& v : r.violations) {
        ojson e;
        e["subject"] = v.subject;
        e["description"] = v.description;
        arr.push_back(std::move(e));
    }
    return arr;
}

void print_violations(const ValidationReport& r) {
    for (const auto& v : r.violations)
        std::cout << "  " << v.subject << ": " << v.description << "\n";
}

void print_json(const ojson& j) { std::cout << j.dump(2) << "\n"; }

LinearAutomaton load_automaton(const std::string& path) {
    return parse_automaton(read_file(path));
}

int emit_automaton(const LinearAutomaton& a, const std::string& out_path) {
    const std::string text = serialize_automaton(a);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int cmd_check(const std::string& path, const GlobalOpts& g) {
    const LinearAutomaton a = load_automaton(path);
    ValidationReport report = validate_deterministic(a);
    if (a.deterministic()) {
        ValidationReport comp = validate_complete(a, false);
        report.violations.insert(report.violations.end(), comp.violations.begin(),
                                 comp.violations.end());
    }
    const bool deterministic = a.deterministic();
    const bool complete = a.complete();
    if (g.json) {
        ojson j;
        j["deterministic"] = deterministic;
        j["complete"] = complete;
        j["violations"] = violations_json(report);
        print_json(j);
    } else {
        std::cout << "deterministic: " << (deterministic ? "yes" : "no")
                  << ", complete: " << (complete ? "yes" : "no") << "\n";
        print_violations(report);
    }
    return deterministic && complete ? 0 : 1;
}

int cmd_run(const std::string& path, const std::string& word, const GlobalOpts& g) {
    const LinearAutomaton a = load_automaton(path);
    const RunTrace trace = run(a, word);
    if (g.json) {
        ojson j;
        j["word"] = word;
        j["accepted"] = trace.accepted;
        j["completed"] = trace.completed;
        j["final_state"] = trace.final_state;
        j["split"] = presu_json(trace.split);
        j["unread"] = trace.input.substr(trace.lo, trace.hi - trace.lo);
        ojson steps = ojson::array();
        for (const RunStep& s : trace.steps) {
            ojson e;
            e["from"] = s.from;
            e["head"] = std::string(1, head_char(s.head));
            e["letter"] = std::string(1, s.letter);
            e["to"] = s.to;
            steps.push_back(std::move(e));
        }
        j["steps"] = std::move(steps);
        print_json(j);
    } else {
        std::cout << (trace.accepted ? "ACCEPT" : "REJECT") << "\n";
        std::cout << "split: " << presu_str(trace.split, true) << "\n";
        if (!trace.completed)
            std::cout << "stuck: unread \"" << trace.input.substr(trace.lo, trace.hi - trace.lo)
                      << "\"\n";
        for (const RunStep& s : trace.steps)
            std::cout << s.from << " --" << head_char(s.head) << ":" << s.letter << "--> "
                      << s.to << "\n";
    }
    return trace.accepted ? 0 : 1;
}

int cmd_classes(const std::string& path, std::size_t bound, bool merge, std::size_t mid_bound,
                const GlobalOpts& g) {
    const LinearAutomaton a = load_automaton(path);
    PseudoBC p = enumerate_pseudo_bc(a, bound);
    if (merge)
        p = merge_classes(p, a, mid_bound, g.budget);
    if (g.json) {
        ojson j;
        j["bound"] = p.bound;
        if (p.merged_mid_bound)
            j["merged_mid_bound"] = *p.merged_mid_bound;
        else
            j["merged_mid_bound"] = nullptr;
        ojson classes = ojson::array();
        for (const std::string& id : p.class_order) {
            ojson e;
            e["id"] = id;
            ojson presus = ojson::array();
            for (const Presu& pr : p.classes.at(id))
                presus.push_back(presu_json(pr));
            e["presus"] = std::move(presus);
            classes.push_back(std::move(e));
        }
        j["classes"] = std::move(classes);
        ojson of_state = ojson::object();
        for (const std::string& name : a.states()) {
            auto it = p.class_of_state.find(name);
            if (it != p.class_of_state.end())
                of_state[name] = it->second;
        }
        j["class_of_state"] = std::move(of_state);
        print_json(j);
    } else {
        for (const std::string& id : p.class_order) {
            std::cout << "C(" << id << "):";
            for (const Presu& pr : p.classes.at(id))
                std::cout << " " << presu_str(pr, false);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_bc_check(const std::string& path, const std::string& alphabet_letters, std::size_t bound,
                 const GlobalOpts& g) {
    const std::vector<Presu> presus = parse_presus(read_file(path));
    const Alphabet alphabet{std::string_view(alphabet_letters)};
    const BCCheckReport complete = check_complete(presus, alphabet, bound);
    const BCCheckReport crossing = check_crossing_free(presus);
    const bool ok = complete.complete_up_to && crossing.crossing_pairs.empty();
    if (g.json) {
        ojson j;
        j["bound"] = bound;
        j["complete_up_to"] = complete.complete_up_to;
        ojson bad_words = ojson::array();
        for (const auto& [word, matches] : complete.missing_or_duplicated) {
            ojson e;
            e["word"] = word;
            ojson m = ojson::array();
            for (const Presu& pr : matches)
                m.push_back(presu_json(pr));
            e["matches"] = std::move(m);
            bad_words.push_back(std::move(e));
        }
        j["missing_or_duplicated"] = std::move(bad_words);
        j["crossing_free"] = crossing.crossing_pairs.empty();
        ojson pairs = ojson::array();
        for (const auto& [p1, p2] : crossing.crossing_pairs)
            pairs.push_back(ojson::array({presu_json(p1), presu_json(p2)}));
        j["crossing_pairs"] = std::move(pairs);
        print_json(j);
    } else {
        std::cout << "complete up to " << bound << ": "
                  << (complete.complete_up_to ? "yes" : "no") << "\n";
        for (const auto& [word, matches] : complete.missing_or_duplicated) {
            std::cout << "  " << word_str(word) << ": ";
            if (matches.empty()) {
                std::cout << "no matching presu\n";
            } else {
                std::cout << matches.size() << " matches";
                for (const Presu& pr : matches)
                    std::cout << " " << presu_str(pr, false);
                std::cout << "\n";
            }
        }
        std::cout << "crossing-free: " << (crossing.crossing_pairs.empty() ? "yes" : "no")
                  << "\n";
        for (const auto& [p1, p2] : crossing.crossing_pairs)
            std::cout << "  " << presu_str(p1, false) << " crosses " << presu_str(p2, false)
                      << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_build(const std::string& path, const std::string& out_path, const GlobalOpts& g) {
    const BCSpec spec = parse_bc_spec(read_file(path));
    const ValidationReport report = validate_bc_spec(spec);
    if (!report.ok()) {
        if (g.json) {
            ojson j;
            j["ok"] = false;
            j["violations"] = violations_json(report);
            print_json(j);
        } else {
            for (const auto& v : report.violations)
                std::cout << v.subject << ": " << v.description << "\n";
        }
        return 1;
    }
    const SynthesisResult result = build_automaton(spec);
    const std::string text = serialize_automaton(result.automaton);
    if (!out_path.empty())
        write_file(out_path, text);
    if (g.json) {
        ojson j;
        j["ok"] = true;
        j["violations"] = ojson::array();
        j["automaton"] = ojson::parse(text);
        ojson mapping = ojson::array();
        for (const auto& [key, state] : result.state_of) {
            ojson e;
            e["class"] = key.first;
            e["side"] = key.second == Head::Left ? "left" : "right";
            e["state"] = state;
            mapping.push_back(std::move(e));
        }
        j["state_of"] = std::move(mapping);
        print_json(j);
    } else if (out_path.empty()) {
        std::cout << text;
    }
    return 0;
}

int cmd_roundtrip(const std::string& path, std::size_t bound, std::size_t mid_bound,
                  const GlobalOpts& g) {
    const LinearAutomaton a = load_automaton(path);
    const ValidationReport report = roundtrip_check(a, bound, mid_bound, g.budget);
    if (g.json) {
        ojson j;
        j["ok"] = report.ok();
        j["bound"] = bound;
        j["mid_bound"] = mid_bound;
        j["violations"] = violations_json(report);
        print_json(j);
    } else {
        std::cout << "roundtrip: " << (report.ok() ? "ok" : "failed") << "\n";
        print_violations(report);
    }
    return report.ok() ? 0 : 1;
}

std::vector<std::string> words_from_source(const std::string& source, const Alphabet& alphabet,
                                           std::size_t budget) {
    if (source.rfind("gen:", 0) == 0) {
        const std::string_view digits = std::string_view(source).substr(4);
        std::size_t maxlen = 0;
        const char* begin = digits.data();
        const char* end = begin + digits.size();
        auto [ptr, ec] = std::from_chars(begin, end, maxlen);
        if (ec != std::errc() || ptr != end || digits.empty())
            throw std::invalid_argument("--words-from: expected <file> or gen:<maxlen>");
        return enumerate_words(alphabet, maxlen, budget);
    }
    std::vector<std::string> words;
    std::string current;
    for (char c : read_file(source)) {
        if (c == '\n') {
            words.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    if (!current.empty())
        words.push_back(std::move(current));
    return words;
}

int cmd_schedule(const std::string& path, const std::string& rate_text,
                 const std::string& words_source, const GlobalOpts& g) {
    const LinearAutomaton a = load_automaton(path);
    const Rate rate = Rate::parse(rate_text);
    const std::vector<std::string> words = words_from_source(words_source, a.alphabet(), g.budget);
    const ConformanceReport report = check_conformance(a, rate, words);
    if (g.json) {
        ojson j;
        j["rate"] = rate.to_string();
        j["words_checked"] = report.words_checked;
        j["ok"] = report.ok();
        ojson violations = ojson::array();
        for (const ConformanceViolation& v : report.violations) {
            ojson e;
            e["word"] = v.word;
            e["step"] = v.step;
            e["expected"] = std::string(1, head_char(v.expected));
            e["actual"] = std::string(1, head_char(v.actual));
            violations.push_back(std::move(e));
        }
        j["violations"] = std::move(violations);
        print_json(j);
    } else {
        std::cout << "rate: " << rate.to_string() << "\n";
        std::cout << "words checked: " << report.words_checked << "\n";
        std::cout << "conforming: " << (report.ok() ? "yes" : "no") << "\n";
        for (const ConformanceViolation& v : report.violations)
            std::cout << "  " << word_str(v.word) << ": step " << v.step << " expected "
                      << head_char(v.expected) << ", actual " << head_char(v.actual) << "\n";
    }
    return report.ok() ? 0 : 1;
}

int cmd_equiv(const std::string& path_a, const std::string& path_b, std::size_t maxlen,
              const GlobalOpts& g) {
    const LinearAutomaton a = load_automaton(path_a);
    const LinearAutomaton b = load_automaton(path_b);
    const EquivalenceVerdict verdict = equiv_bounded(a, b, maxlen);
    if (g.json) {
        ojson j;
        j["maxlen"] = maxlen;
        j["equivalent"] = verdict.equivalent_up_to;
        if (verdict.witness)
            j["witness"] = *verdict.witness;
        else
            j["witness"] = nullptr;
        print_json(j);
    } else {
        std::cout << "equivalent up to " << maxlen << ": "
                  << (verdict.equivalent_up_to ? "yes" : "no") << "\n";
        if (verdict.witness)
            std::cout << "witness: " << word_str(*verdict.witness) << "\n";
    }
    return verdict.equivalent_up_to ? 0 : 1;
}

int cmd_probe(const std::string& lang_name, const std::string& alphabet_letters,
              const std::vector<std::string>& stubs, std::size_t max_power,
              std::size_t mid_bound, const GlobalOpts& g) {
    const LanguagePredicate lang =
        alphabet_letters.empty()
            ? builtin_language(lang_name)
            : builtin_language(lang_name, Alphabet{std::string_view(alphabet_letters)});
    const std::size_t cells =
        class_growth_probe(lang, stubs[0], stubs[1], max_power, mid_bound, g.budget);
    if (g.json) {
        ojson j;
        j["lang"] = lang.name;
        j["stubs"] = ojson::array({stubs[0], stubs[1]});
        j["B"] = max_power;
        j["mid_bound"] = mid_bound;
        j["cells"] = cells;
        print_json(j);
    } else {
        std::cout << "lang: " << lang.name << "\n";
        std::cout << "cells: " << cells << "\n";
    }
    return 0;
}

} // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"two-head linear automata: simulation, class analysis, synthesis"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_flag("--json", g.json, "emit JSON instead of plain text");
    app.add_option("--budget", g.budget, "membership-test budget for bounded sweeps")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized sweeps (reserved)");

    int exit_code = 0;

    auto* check = app.add_subcommand("check", "report determinism and completeness");
    std::string check_path;
    check->add_option("automaton", check_path, "automaton JSON file")->required();
    check->callback([&] { exit_code = cmd_check(check_path, g); });

    auto* run_cmd = app.add_subcommand("run", "run a word and print the trace");
    std::string run_path;
    std::string run_word;
    run_cmd->add_option("automaton", run_path, "automaton JSON file")->required();
    run_cmd->add_option("word", run_word, "input word (may be empty)");
    run_cmd->callback([&] { exit_code = cmd_run(run_path, run_word, g); });

    auto* complete_cmd = app.add_subcommand("complete", "add a sink for missing transitions");
    std::string complete_path;
    std::string complete_out;
    complete_cmd->add_option("automaton", complete_path, "automaton JSON file")->required();
    complete_cmd->add_option("-o,--output", complete_out, "output file (default stdout)");
    complete_cmd->callback(
        [&] { exit_code = emit_automaton(complete_with_sink(load_automaton(complete_path)),
                                         complete_out); });

    auto* complement_cmd = app.add_subcommand("complement", "swap the accepting set");
    std::string complement_path;
    std::string complement_out;
    complement_cmd->add_option("automaton", complement_path, "automaton JSON file")->required();
    complement_cmd->add_option("-o,--output", complement_out, "output file (default stdout)");
    complement_cmd->callback(
        [&] { exit_code = emit_automaton(complement(load_automaton(complement_path)),
                                         complement_out); });

    auto* classes_cmd = app.add_subcommand("classes", "enumerate presu classes breadth-first");
    std::string classes_path;
    std::size_t classes_bound = 0;
    bool classes_merge = false;
    std::size_t classes_mid = 0;
    classes_cmd->add_option("automaton", classes_path, "automaton JSON file")->required();
    classes_cmd->add_option("--bound", classes_bound, "max total presu length")->required();
    classes_cmd->add_flag("--merge", classes_merge, "union bounded-equivalent classes");
    auto* classes_mid_opt =
        classes_cmd->add_option("--mid-bound", classes_mid, "middle length bound for merging");
    classes_cmd->callback([&] {
        if (classes_merge && classes_mid_opt->count() == 0)
            throw std::invalid_argument("--merge requires --mid-bound");
        exit_code = cmd_classes(classes_path, classes_bound, classes_merge, classes_mid, g);
    });

    auto* bc_cmd = app.add_subcommand("bc-check", "check a presu set for completeness and crossings");
    std::string bc_path;
    std::string bc_alphabet;
    std::size_t bc_bound = 0;
    bc_cmd->add_option("presus", bc_path, "presu list JSON file")->required();
    bc_cmd->add_option("--alphabet", bc_alphabet, "alphabet letters, e.g. ab")->required();
    bc_cmd->add_option("--bound", bc_bound, "max word length for the completeness sweep")
        ->required();
    bc_cmd->callback([&] { exit_code = cmd_bc_check(bc_path, bc_alphabet, bc_bound, g); });

    auto* build_cmd = app.add_subcommand("build", "synthesize an automaton from a class structure");
    std::string build_path;
    std::string build_out;
    build_cmd->add_option("spec", build_path, "class structure JSON file")->required();
    build_cmd->add_option("-o,--output", build_out, "output file (default stdout)");
    build_cmd->callback([&] { exit_code = cmd_build(build_path, build_out, g); });

    auto* roundtrip_cmd =
        app.add_subcommand("roundtrip", "derive a class structure, rebuild, and compare");
    std::string roundtrip_path;
    std::size_t roundtrip_bound = 0;
    std::size_t roundtrip_mid = 0;
    roundtrip_cmd->add_option("automaton", roundtrip_path, "automaton JSON file")->required();
    roundtrip_cmd->add_option("--bound", roundtrip_bound, "max word length for the comparison")
        ->required();
    roundtrip_cmd->add_option("--mid-bound", roundtrip_mid, "middle length bound for merging")
        ->required();
    roundtrip_cmd->callback(
        [&] { exit_code = cmd_roundtrip(roundtrip_path, roundtrip_bound, roundtrip_mid, g); });

    auto* schedule_cmd = app.add_subcommand("schedule", "compare head usage against a rate");
    std::string schedule_path;
    std::string schedule_rate;
    std::string schedule_words;
    schedule_cmd->add_option("automaton", schedule_path, "automaton JSON file")->required();
    schedule_cmd->add_option("--rate", schedule_rate, "head rate m/n")->required();
    schedule_cmd
        ->add_option("--words-from", schedule_words,
                     "word list file (one word per line, blank = empty word) or gen:<maxlen>")
        ->required();
    schedule_cmd->callback(
        [&] { exit_code = cmd_schedule(schedule_path, schedule_rate, schedule_words, g); });

    auto* equiv_cmd = app.add_subcommand("equiv", "compare two automata on all short words");
    std::string equiv_a;
    std::string equiv_b;
    std::size_t equiv_maxlen = 0;
    equiv_cmd->add_option("a", equiv_a, "first automaton JSON file")->required();
    equiv_cmd->add_option("b", equiv_b, "second automaton JSON file")->required();
    equiv_cmd->add_option("--maxlen", equiv_maxlen, "max word length")->required();
    equiv_cmd->callback([&] { exit_code = cmd_equiv(equiv_a, equiv_b, equiv_maxlen, g); });

    auto* probe_cmd = app.add_subcommand("probe", "count equivalence cells of stub presus");
    std::string probe_lang;
    std::string probe_alphabet;
    std::vector<std::string> probe_stubs;
    std::size_t probe_b = 0;
    std::size_t probe_mid = 0;
    probe_cmd->add_option("--lang", probe_lang, "builtin language name")->required();
    probe_cmd->add_option("--alphabet", probe_alphabet, "alphabet override for generic builtins");
    probe_cmd->add_option("--stubs", probe_stubs, "prefix and suffix stubs")
        ->expected(2)
        ->required();
    probe_cmd->add_option("--B", probe_b, "max stub power")->required();
    probe_cmd->add_option("--mid-bound", probe_mid, "middle length bound")->required();
    probe_cmd->callback([&] {
        exit_code = cmd_probe(probe_lang, probe_alphabet, probe_stubs, probe_b, probe_mid, g);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace linaut
