#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pythag/compose.hpp"
#include "pythag/core.hpp"
#include "pythag/decomp.hpp"
#include "pythag/gen.hpp"
#include "pythag/theorems.hpp"

namespace pythag::cli {

namespace detail {

using json = nlohmann::ordered_json;

constexpr Int limit_cap = 100'000'000;

inline std::string dec(Int v) { return std::to_string(v); }

inline bool parse_int(const std::string& token, Int& value) {
    const char* first = token.data();
    const char* last = first + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc{} && ptr == last;
}

// Triples on the command line are written a,b,c with no spaces.
inline bool parse_triple_fields(const std::string& text, std::array<Int, 3>& fields) {
    std::array<std::string, 3> parts;
    std::size_t part = 0;
    for (const char ch : text) {
        if (ch == ',') {
            if (++part == parts.size()) return false;
        } else {
            parts[part].push_back(ch);
        }
    }
    if (part != 2) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parse_int(parts[i], fields[i])) return false;
    }
    return true;
}

// Syntax-only check used while parsing argv, so malformed triples are
// usage errors; whether the numbers form a valid triple is decided later.
inline const CLI::Validator triple_format{
    [](std::string& text) -> std::string {
        std::array<Int, 3> fields;
        if (!parse_triple_fields(text, fields)) return "expected a triple written as a,b,c";
        return {};
    },
    "A,B,C", "triple"};

inline Triplet triple_argument(const std::string& text) {
    std::array<Int, 3> fields;
    if (!parse_triple_fields(text, fields))
        throw error(errc::invalid_argument, "expected a triple written as a,b,c");
    return validate(fields[0], fields[1], fields[2]);
}

inline Sign sign_argument(const std::string& text) {
    if (text == "+1" || text == "+" || text == "plus") return Sign::plus;
    return Sign::minus;
}

struct Emitter {
    std::ostream& out;
    bool jsonl;

    void line(const json& record) const { out << record.dump() << '\n'; }

    void triple(const Triplet& t) const {
        if (jsonl)
            line({{"kind", "Triplet"}, {"a", dec(t.a())}, {"b", dec(t.b())}, {"c", dec(t.c())}});
        else
            out << t << '\n';
    }
};

inline void emit_triples(const Emitter& e, const std::vector<Triplet>& triples) {
    for (const Triplet& t : triples) e.triple(t);
}

inline void emit_classification(const Emitter& e, Int n, PeakClass cls) {
    if (e.jsonl)
        e.line({{"kind", to_string(cls)}, {"peak", dec(n)}});
    else
        e.out << n << ": " << to_string(cls) << '\n';
}

inline void emit_reports(const Emitter& e, const std::vector<TheoremReport>& reports) {
    for (const TheoremReport& report : reports) {
        if (e.jsonl) {
            json violations = json::array();
            for (const Triplet& t : report.violations)
                violations.push_back({{"a", dec(t.a())}, {"b", dec(t.b())}, {"c", dec(t.c())}});
            e.line({{"kind", "TheoremReport"},
                    {"theorem", to_string(report.theorem)},
                    {"violations", std::move(violations)}});
        } else {
            e.out << to_string(report.theorem) << ": ";
            if (report.holds()) {
                e.out << "ok (peaks <= " << report.range_checked << ")\n";
            } else {
                e.out << report.violations.size() << " violation(s):";
                for (const Triplet& t : report.violations) e.out << ' ' << t;
                e.out << '\n';
            }
        }
    }
}

inline void emit_scan(const Emitter& e, const std::vector<ConjectureEntry>& entries) {
    for (const ConjectureEntry& entry : entries) {
        if (entry.witness) {
            if (e.jsonl)
                e.line({{"kind", "Witness"},
                        {"peak", dec(entry.prime)},
                        {"a", dec(entry.witness->a())},
                        {"b", dec(entry.witness->b())},
                        {"c", dec(entry.witness->c())}});
            else
                e.out << entry.prime << ": " << *entry.witness << '\n';
        } else {
            if (e.jsonl)
                e.line({{"kind", "Unwitnessed"}, {"peak", dec(entry.prime)}});
            else
                e.out << entry.prime << ": no witness\n";
        }
    }
}

// The three reference tables. Everything is recomputed through the library;
// the values themselves are pinned by the test fixtures.
inline void emit_tables(const Emitter& e) {
    constexpr std::array<Int, 4> ps = {2, 4, 6, 8};
    constexpr std::array<Int, 5> qs = {1, 3, 5, 7, 9};

    struct Cell1 {
        Int p, q;
        bool coprime;
        Triplet t;
    };
    std::vector<Cell1> table1;
    for (const Int p : ps) {
        for (const Int q : qs) {
            if (std::gcd(p, q) == 1)
                table1.push_back({p, q, true, from_pq(p, q)});
            else
                table1.push_back({p, q, false, Triplet::validate(4, 3, 5)});
        }
    }

    const std::array<Triplet, 2> rows = {triple_argument("4,3,5"), triple_argument("12,5,13")};
    const std::array<Triplet, 3> cols = {triple_argument("12,5,13"), triple_argument("8,15,17"),
                                         triple_argument("20,21,29")};
    struct Cell2 {
        Triplet t1, t2;
        Sign sign;
        Triplet result;
    };
    std::vector<Cell2> table2;
    for (const Triplet& t1 : rows) {
        for (const Triplet& t2 : cols) {
            table2.push_back({t1, t2, Sign::plus, compose(t1, t2, Sign::plus)});
            if (t1 != t2) table2.push_back({t1, t2, Sign::minus, compose(t1, t2, Sign::minus)});
        }
    }

    struct Cell3 {
        Int n;
        PeakClass cls;
    };
    std::vector<Cell3> table3;
    for (Int n = 5; n < 100; n += 2) {
        if (n % 3 == 0) continue;
        table3.push_back({n, classify_number(n)});
    }

    const auto plain = [](const Triplet& t) {
        return dec(t.a()) + ',' + dec(t.b()) + ',' + dec(t.c());
    };

    if (!e.jsonl) e.out << "table 1: triples from the p,q sweep (p even, q odd, both below 10)\n";
    for (const Cell1& cell : table1) {
        if (e.jsonl) {
            json record = {{"kind", "Table1"}, {"p", dec(cell.p)}, {"q", dec(cell.q)}};
            if (cell.coprime) {
                record["a"] = dec(cell.t.a());
                record["b"] = dec(cell.t.b());
                record["c"] = dec(cell.t.c());
            } else {
                record["class"] = errc_name(errc::not_coprime);
            }
            e.line(record);
        } else {
            e.out << "  p=" << cell.p << " q=" << cell.q << "  ";
            if (cell.coprime)
                e.out << cell.t << '\n';
            else
                e.out << "x (" << errc_name(errc::not_coprime) << ")\n";
        }
    }

    if (!e.jsonl) e.out << "table 2: pairwise compositions of small triples\n";
    for (const Cell2& cell : table2) {
        if (e.jsonl) {
            e.line({{"kind", "Table2"},
                    {"t1", plain(cell.t1)},
                    {"t2", plain(cell.t2)},
                    {"sign", cell.sign == Sign::plus ? "+1" : "-1"},
                    {"a", dec(cell.result.a())},
                    {"b", dec(cell.result.b())},
                    {"c", dec(cell.result.c())}});
        } else {
            e.out << "  " << plain(cell.t1) << " " << plain(cell.t2) << " "
                  << (cell.sign == Sign::plus ? "+1" : "-1") << "  " << cell.result << '\n';
        }
    }

    if (!e.jsonl) e.out << "table 3: odd numbers below 100 (multiples of 3 excluded) as peaks\n";
    for (const Cell3& cell : table3) {
        if (e.jsonl)
            e.line({{"kind", "Table3"}, {"peak", dec(cell.n)}, {"class", to_string(cell.cls)}});
        else
            e.out << "  " << cell.n << "  " << to_string(cell.cls) << '\n';
    }
}

}  // namespace detail

// Parses argv (without the program name) and executes one subcommand.
// Returns 0 on success, 1 on a domain error (kind goes to err), 2 on a
// usage error. All fallible work happens before the first output byte,
// so failing invocations never emit partial results.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-integer toolkit for primitive Pythagorean triples", "pythag"};
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "output mode")
        ->check(CLI::IsMember({"table", "jsonl"}))
        ->capture_default_str();

    const CLI::Range limit_range{Int{1}, detail::limit_cap};

    Int limit = 0;
    Int number = 0;
    Int exponent = 1;
    std::string t1_text, t2_text, t_text;
    std::string sign_text = "+1";

    CLI::App* gen = app.add_subcommand("gen", "enumerate triples with peak <= limit");
    gen->add_option("--limit", limit, "peak bound")->required()->check(limit_range);

    CLI::App* from_pq_cmd = app.add_subcommand("from-pq", "build the triple for a p,q pair");
    Int p = 0, q = 0;
    from_pq_cmd->add_option("P", p, "even member")->required()->check(limit_range);
    from_pq_cmd->add_option("Q", q, "odd member")->required()->check(limit_range);

    CLI::App* compose_cmd = app.add_subcommand("compose", "compose two triples");
    compose_cmd->add_option("T1", t1_text, "first triple")->required()->check(detail::triple_format);
    compose_cmd->add_option("T2", t2_text, "second triple")->required()->check(detail::triple_format);
    compose_cmd->add_option("--sign", sign_text, "composition sign")
        ->check(CLI::IsMember({"+1", "-1", "+", "-", "plus", "minus"}))
        ->capture_default_str();

    CLI::App* power_cmd = app.add_subcommand("power", "raise a triple to an integer power");
    power_cmd->add_option("T", t_text, "base triple")->required()->check(detail::triple_format);
    power_cmd->add_option("N", exponent, "exponent")->required()->check(limit_range);

    CLI::App* peak_cmd = app.add_subcommand("peak", "list the primitive triples with peak N");
    peak_cmd->add_option("N", number, "candidate peak")->required()->check(limit_range);

    CLI::App* split_cmd = app.add_subcommand("split", "factor two same-peak triples");
    split_cmd->add_option("T1", t1_text, "first triple")->required()->check(detail::triple_format);
    split_cmd->add_option("T2", t2_text, "second triple")->required()->check(detail::triple_format);

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify N as a peak");
    classify_cmd->add_option("N", number, "number to classify")->required()->check(limit_range);

    CLI::App* check_cmd = app.add_subcommand("check", "run the theorem suite");
    check_cmd->add_option("--limit", limit, "peak bound")->required()->check(limit_range);

    CLI::App* scan_cmd = app.add_subcommand("scan", "scan 12k+1 / 12k+5 primes for witnesses");
    scan_cmd->add_option("--limit", limit, "prime bound")->required()->check(limit_range);

    CLI::App* tables_cmd = app.add_subcommand("tables", "emit the three reference tables");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::Success& e) {
        (void)app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e, out, err);
        return 2;
    }

    const detail::Emitter emit{out, format == "jsonl"};
    try {
        if (gen->parsed()) {
            detail::emit_triples(emit, enumerate_peak_bounded(limit));
        } else if (from_pq_cmd->parsed()) {
            emit.triple(from_pq(p, q));
        } else if (compose_cmd->parsed()) {
            const Triplet t1 = detail::triple_argument(t1_text);
            const Triplet t2 = detail::triple_argument(t2_text);
            emit.triple(compose(t1, t2, detail::sign_argument(sign_text)));
        } else if (power_cmd->parsed()) {
            emit.triple(power(detail::triple_argument(t_text), exponent));
        } else if (peak_cmd->parsed()) {
            detail::emit_triples(emit, triples_for_peak(number));
        } else if (split_cmd->parsed()) {
            const SplitResult parts =
                split_peak(detail::triple_argument(t1_text), detail::triple_argument(t2_text));
            emit.triple(parts.first);
            emit.triple(parts.second);
        } else if (classify_cmd->parsed()) {
            detail::emit_classification(emit, number, classify_number(number));
        } else if (check_cmd->parsed()) {
            detail::emit_reports(emit, run_suite(limit));
        } else if (scan_cmd->parsed()) {
            detail::emit_scan(emit, conjecture_scan(limit));
        } else if (tables_cmd->parsed()) {
            detail::emit_tables(emit);
        }
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace pythag::cli
