#include "linaut/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace linaut {

namespace {

using ojson = nlohmann::ordered_json;

ojson parse_document(std::string_view text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

void reject_unknown(const ojson& j, const std::string& context,
                    std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* f) { return key == f; });
        if (!known)
            throw ParseError(context + ": unknown field \"" + key + "\"");
    }
}

const ojson& require_field(const ojson& j, const char* field, const std::string& context) {
    auto it = j.find(field);
    if (it == j.end())
        throw ParseError(context + ": missing field \"" + std::string(field) + "\"");
    return *it;
}

std::string require_string(const ojson& j, const char* field, const std::string& context) {
    const ojson& v = require_field(j, field, context);
    if (!v.is_string())
        throw ParseError(context + "." + field + ": expected a string");
    return v.get<std::string>();
}

Alphabet parse_alphabet(const ojson& j, const std::string& context) {
    if (!j.is_array())
        throw ParseError(context + ": expected an array of single-character strings");
    std::vector<char> letters;
    std::set<char> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = context + "[" + std::to_string(i) + "]";
        const ojson& entry = j[i];
        if (!entry.is_string() || entry.get<std::string>().size() != 1)
            throw ParseError(where + ": expected a single-character string");
        const char c = entry.get<std::string>()[0];
        if (!seen.insert(c).second)
            throw ParseError(where + ": duplicate letter \"" + std::string(1, c) + "\"");
        letters.push_back(c);
    }
    if (letters.empty())
        throw ParseError(context + ": alphabet must not be empty");
    return Alphabet(letters);
}

ojson alphabet_to_json(const Alphabet& alphabet) {
    ojson j = ojson::array();
    for (char c : alphabet.letters())
        j.push_back(std::string(1, c));
    return j;
}

Head parse_head(const ojson& v, const std::string& context) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "L")
            return Head::Left;
        if (s == "R")
            return Head::Right;
        throw ParseError(context + ": expected \"L\" or \"R\", got \"" + s + "\"");
    }
    throw ParseError(context + ": expected \"L\" or \"R\"");
}

Head parse_side(const ojson& v, const std::string& context) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "left")
            return Head::Left;
        if (s == "right")
            return Head::Right;
        throw ParseError(context + ": expected \"left\" or \"right\", got \"" + s + "\"");
    }
    throw ParseError(context + ": expected \"left\" or \"right\"");
}

ClassRef parse_class_ref(const ojson& v, const std::string& context) {
    if (!v.is_array() || v.size() != 2)
        throw ParseError(context + ": expected a [class-id, side] pair");
    if (!v[0].is_string())
        throw ParseError(context + "[0]: expected a class id string");
    return {v[0].get<std::string>(), parse_side(v[1], context + "[1]")};
}

ojson class_ref_to_json(const ClassRef& ref) {
    return ojson::array({ref.class_id, ref.side == Head::Left ? "left" : "right"});
}

} // namespace

LinearAutomaton parse_automaton(std::string_view text) {
    const ojson j = parse_document(text);
    if (!j.is_object())
        throw ParseError("automaton: expected a JSON object");
    reject_unknown(j, "automaton", {"alphabet", "states", "initial", "accepting", "transitions"});

    const Alphabet alphabet = parse_alphabet(require_field(j, "alphabet", "automaton"), "alphabet");

    const ojson& jstates = require_field(j, "states", "automaton");
    if (!jstates.is_array())
        throw ParseError("states: expected an array of state names");
    std::vector<std::string> states;
    std::set<std::string> known;
    for (std::size_t i = 0; i < jstates.size(); ++i) {
        const std::string where = "states[" + std::to_string(i) + "]";
        if (!jstates[i].is_string())
            throw ParseError(where + ": expected a state name string");
        std::string name = jstates[i].get<std::string>();
        if (name.empty())
            throw ParseError(where + ": empty state name");
        if (!known.insert(name).second)
            throw ParseError(where + ": duplicate state \"" + name + "\"");
        states.push_back(std::move(name));
    }

    const std::string initial = require_string(j, "initial", "automaton");
    if (!known.count(initial))
        throw ParseError("initial: unknown state \"" + initial + "\"");

    const ojson& jaccepting = require_field(j, "accepting", "automaton");
    if (!jaccepting.is_array())
        throw ParseError("accepting: expected an array of state names");
    std::vector<std::string> accepting;
    std::set<std::string> accepting_seen;
    for (std::size_t i = 0; i < jaccepting.size(); ++i) {
        const std::string where = "accepting[" + std::to_string(i) + "]";
        if (!jaccepting[i].is_string())
            throw ParseError(where + ": expected a state name string");
        std::string name = jaccepting[i].get<std::string>();
        if (!known.count(name))
            throw ParseError(where + ": unknown state \"" + name + "\"");
        if (!accepting_seen.insert(name).second)
            throw ParseError(where + ": duplicate state \"" + name + "\"");
        accepting.push_back(std::move(name));
    }

    const ojson& jtrans = require_field(j, "transitions", "automaton");
    if (!jtrans.is_array())
        throw ParseError("transitions: expected an array");
    std::vector<Transition> transitions;
    std::set<std::tuple<std::string, Head, char, std::string>> dedupe;
    for (std::size_t i = 0; i < jtrans.size(); ++i) {
        const std::string where = "transitions[" + std::to_string(i) + "]";
        const ojson& entry = jtrans[i];
        if (!entry.is_object())
            throw ParseError(where + ": expected an object");
        reject_unknown(entry, where, {"from", "head", "letter", "to"});

        Transition t;
        t.from = require_string(entry, "from", where);
        if (!known.count(t.from))
            throw ParseError(where + ".from: unknown state \"" + t.from + "\"");
        t.head = parse_head(require_field(entry, "head", where), where + ".head");
        const std::string letter = require_string(entry, "letter", where);
        if (letter.size() != 1)
            throw ParseError(where + ".letter: expected a single-character string");
        if (!alphabet.contains(letter[0]))
            throw ParseError(where + ".letter: letter \"" + letter + "\" outside the alphabet");
        t.letter = letter[0];
        t.to = require_string(entry, "to", where);
        if (!known.count(t.to))
            throw ParseError(where + ".to: unknown state \"" + t.to + "\"");
        if (!dedupe.emplace(t.from, t.head, t.letter, t.to).second)
            throw ParseError(where + ": duplicate transition");
        transitions.push_back(std::move(t));
    }

    try {
        return LinearAutomaton(alphabet, std::move(states), initial, std::move(accepting),
                               std::move(transitions));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("automaton: ") + e.what());
    }
}

std::string serialize_automaton(const LinearAutomaton& a) {
    ojson j;
    j["alphabet"] = alphabet_to_json(a.alphabet());
    j["states"] = a.states();
    j["initial"] = a.initial();
    j["accepting"] = a.accepting();
    ojson jtrans = ojson::array();
    for (const Transition& t : a.canonical_transitions()) {
        ojson entry;
        entry["from"] = t.from;
        entry["head"] = std::string(1, head_char(t.head));
        entry["letter"] = std::string(1, t.letter);
        entry["to"] = t.to;
        jtrans.push_back(std::move(entry));
    }
    j["transitions"] = std::move(jtrans);
    return j.dump(2) + "\n";
}

std::vector<Presu> parse_presus(std::string_view text) {
    const ojson j = parse_document(text);
    if (!j.is_array())
        throw ParseError("presus: expected a JSON array");
    std::vector<Presu> presus;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "presus[" + std::to_string(i) + "]";
        const ojson& entry = j[i];
        if (!entry.is_object())
            throw ParseError(where + ": expected an object");
        reject_unknown(entry, where, {"prefix", "suffix"});
        presus.push_back(
            {require_string(entry, "prefix", where), require_string(entry, "suffix", where)});
    }
    return presus;
}

std::string serialize_presus(const std::vector<Presu>& presus) {
    ojson j = ojson::array();
    for (const Presu& p : presus) {
        ojson entry;
        entry["prefix"] = p.prefix;
        entry["suffix"] = p.suffix;
        j.push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
}

BCSpec parse_bc_spec(std::string_view text) {
    const ojson j = parse_document(text);
    if (!j.is_object())
        throw ParseError("class structure: expected a JSON object");
    reject_unknown(j, "class structure", {"alphabet", "initial", "classes"});

    Alphabet alphabet =
        parse_alphabet(require_field(j, "alphabet", "class structure"), "alphabet");
    ClassRef initial = parse_class_ref(require_field(j, "initial", "class structure"), "initial");

    const ojson& jclasses = require_field(j, "classes", "class structure");
    if (!jclasses.is_array())
        throw ParseError("classes: expected an array");
    std::vector<BCClass> classes;
    for (std::size_t i = 0; i < jclasses.size(); ++i) {
        const std::string where = "classes[" + std::to_string(i) + "]";
        const ojson& entry = jclasses[i];
        if (!entry.is_object())
            throw ParseError(where + ": expected an object");
        reject_unknown(entry, where, {"id", "accepting", "left", "right"});

        BCClass c;
        c.id = require_string(entry, "id", where);
        const ojson& jacc = require_field(entry, "accepting", where);
        if (!jacc.is_boolean())
            throw ParseError(where + ".accepting: expected a boolean");
        c.accepting = jacc.get<bool>();

        for (const char* side_field : {"left", "right"}) {
            auto it = entry.find(side_field);
            if (it == entry.end())
                continue;
            const std::string side_where = where + "." + side_field;
            if (!it->is_object())
                throw ParseError(side_where + ": expected an object keyed by letters");
            std::map<char, ClassRef> table;
            for (const auto& [key, value] : it->items()) {
                if (key.size() != 1)
                    throw ParseError(side_where + ": letter key \"" + key +
                                     "\" must be a single character");
                table.emplace(key[0],
                              parse_class_ref(value, side_where + "[\"" + key + "\"]"));
            }
            (std::string_view(side_field) == "left" ? c.left : c.right) = std::move(table);
        }
        classes.push_back(std::move(c));
    }
    return {std::move(alphabet), std::move(initial), std::move(classes)};
}

std::string serialize_bc_spec(const BCSpec& spec) {
    ojson j;
    j["alphabet"] = alphabet_to_json(spec.alphabet);
    j["initial"] = class_ref_to_json(spec.initial);
    ojson jclasses = ojson::array();
    for (const BCClass& c : spec.classes) {
        ojson entry;
        entry["id"] = c.id;
        entry["accepting"] = c.accepting;
        for (Head side : {Head::Left, Head::Right}) {
            const auto& table = side == Head::Left ? c.left : c.right;
            if (!table)
                continue;
            ojson jside = ojson::object();
            // Alphabet letters in declaration order, then any stray letters.
            for (char letter : spec.alphabet.letters()) {
                auto it = table->find(letter);
                if (it != table->end())
                    jside[std::string(1, letter)] = class_ref_to_json(it->second);
            }
            for (const auto& [letter, ref] : *table) {
                if (!spec.alphabet.contains(letter))
                    jside[std::string(1, letter)] = class_ref_to_json(ref);
            }
            entry[side == Head::Left ? "left" : "right"] = std::move(jside);
        }
        jclasses.push_back(std::move(entry));
    }
    j["classes"] = std::move(jclasses);
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
}

} // namespace linaut
