/* SPDX-License-Identifier: Apache-2.0 */

// ratseq command line front end.  All arithmetic goes through the shared
// library's C interface; this file only parses arguments and prints.

#include <ratseq.h>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct RatFree {
    void operator()(ratseq_rat* p) const { ratseq_rat_free(p); }
};
struct CfFree {
    void operator()(ratseq_cf* p) const { ratseq_cf_free(p); }
};
struct AdicFree {
    void operator()(ratseq_adic* p) const { ratseq_adic_free(p); }
};
struct StringFree {
    void operator()(char* p) const { ratseq_string_free(p); }
};

using RatPtr = std::unique_ptr<ratseq_rat, RatFree>;
using CfPtr = std::unique_ptr<ratseq_cf, CfFree>;
using AdicPtr = std::unique_ptr<ratseq_adic, AdicFree>;
using StrPtr = std::unique_ptr<char, StringFree>;

// Nonzero statuses abort the command via this exception; main maps the
// status to an exit code.
struct CommandError {
    ratseq_status status;
    std::string message;
};

void check(ratseq_status status) {
    if (status != RATSEQ_OK)
        throw CommandError{status, ratseq_last_error()};
}

std::string rat_str(const ratseq_rat* r) {
    char* text = nullptr;
    check(ratseq_rat_to_string(r, &text));
    StrPtr guard(text);
    return std::string(text);
}

bool looks_like_numeral(const std::string& text) {
    return text.find('(') != std::string::npos;
}

void print_bracket(const ratseq_adic* z, std::uint32_t bits) {
    ratseq_rat* lo = nullptr;
    ratseq_rat* hi = nullptr;
    check(ratseq_adic_eval(z, bits, &lo, &hi));
    RatPtr lo_guard(lo), hi_guard(hi);
    std::cout << "lo=" << rat_str(lo) << "\n";
    std::cout << "hi=" << rat_str(hi) << "\n";
}

AdicPtr parse_adic(const std::string& numeral) {
    ratseq_adic* z = nullptr;
    check(ratseq_adic_parse(numeral.c_str(), &z));
    return AdicPtr(z);
}

void cmd_eval(const std::string& index, std::uint32_t bits) {
    if (looks_like_numeral(index)) {
        print_bracket(parse_adic(index).get(), bits);
        return;
    }
    ratseq_rat* value = nullptr;
    check(ratseq_eval_index(index.c_str(), &value));
    RatPtr guard(value);
    std::cout << rat_str(value) << "\n";
}

void cmd_locate(const std::string& rational) {
    ratseq_rat* value = nullptr;
    check(ratseq_rat_parse(rational.c_str(), &value));
    RatPtr guard(value);
    char* index = nullptr;
    check(ratseq_locate(value, &index));
    StrPtr index_guard(index);
    std::cout << index << "\n";
}

void cmd_cf(const std::string& arg, bool lenient) {
    if (!arg.empty() && arg.front() == '[') {
        // CF text -> exact value
        ratseq_cf* cf = nullptr;
        check(ratseq_cf_parse(arg.c_str(), lenient ? 1 : 0, &cf));
        CfPtr cf_guard(cf);
        ratseq_rat* value = nullptr;
        check(ratseq_cf_value(cf, &value));
        RatPtr value_guard(value);
        std::cout << rat_str(value) << "\n";
        return;
    }
    // rational -> canonical CF
    ratseq_rat* value = nullptr;
    check(ratseq_rat_parse(arg.c_str(), &value));
    RatPtr value_guard(value);
    ratseq_cf* cf = nullptr;
    check(ratseq_cf_from_rat(value, &cf));
    CfPtr cf_guard(cf);
    char* text = nullptr;
    check(ratseq_cf_to_string(cf, &text));
    StrPtr text_guard(text);
    std::cout << text << "\n";
}

void cmd_list(std::uint64_t count) {
    char* lines = nullptr;
    check(ratseq_first_terms(count, &lines));
    StrPtr guard(lines);
    std::cout << lines;
}

void cmd_kepler(std::int64_t depth, bool dot, bool json) {
    char* text = nullptr;
    auto max_depth = static_cast<std::uint32_t>(depth);
    if (dot)
        check(ratseq_kepler_dot(max_depth, &text));
    else if (json)
        check(ratseq_kepler_json(max_depth, &text));
    else
        check(ratseq_kepler_text(max_depth, &text));
    StrPtr guard(text);
    std::cout << text;
}

void cmd_const(const std::string& name, std::uint32_t bits) {
    ratseq_adic* z = nullptr;
    check(ratseq_adic_constant(name.c_str(), &z));
    AdicPtr guard(z);
    print_bracket(z, bits);
}

void cmd_adic_value(const std::string& numeral) {
    AdicPtr z = parse_adic(numeral);
    ratseq_rat* value = nullptr;
    check(ratseq_adic_value(z.get(), &value));
    RatPtr guard(value);
    std::cout << rat_str(value) << "\n";
}

void cmd_adic_truncate(const std::string& numeral, std::uint64_t ones) {
    AdicPtr z = parse_adic(numeral);
    char* index = nullptr;
    check(ratseq_adic_truncate(z.get(), ones, &index));
    StrPtr guard(index);
    std::cout << index << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for the binary-indexed enumeration of the "
                 "positive rationals, continued fractions, Kepler's tree, and "
                 "2-adic index extensions"};
    app.require_subcommand(1);

    std::string index_arg;
    std::uint32_t eval_bits = 64;
    auto* eval = app.add_subcommand(
        "eval", "Sequence value at an index (decimal, 0b-binary, or 2-adic "
                "numeral; periodic numerals print a rational bracket)");
    eval->add_option("index", index_arg, "Index to evaluate")->required();
    eval->add_option("--bits", eval_bits,
                     "Bracket precision for 2-adic numerals (default 64)");

    std::string locate_arg;
    auto* locate = app.add_subcommand("locate", "Index of a positive rational");
    locate->add_option("rational", locate_arg, "Value as p/q or p")->required();

    std::string cf_arg;
    bool cf_lenient = false;
    auto* cf = app.add_subcommand(
        "cf", "Continued fraction of a rational, or value of CF text");
    cf->add_option("value", cf_arg, "p/q (prints its CF) or \"[z; q1, ...]\" "
                                    "(prints its value)")
        ->required();
    cf->add_flag("--lenient", cf_lenient,
                 "Accept a non-canonical final quotient 1 and normalize it");

    std::uint64_t list_count = 0;
    auto* list = app.add_subcommand("list", "First terms of the sequence");
    list->add_option("count", list_count, "How many terms")->required();

    std::int64_t kepler_depth = 0;
    bool kepler_dot = false;
    bool kepler_json = false;
    auto* kepler = app.add_subcommand("kepler", "Kepler's tree of (0,1) rationals");
    kepler->add_option("--depth", kepler_depth, "Levels below the root")
        ->required();
    auto* dot_flag = kepler->add_flag("--dot", kepler_dot, "GraphViz output");
    kepler->add_flag("--json", kepler_json, "JSON output")->excludes(dot_flag);

    auto* adic = app.add_subcommand("adic", "2-adic index operations");
    adic->require_subcommand(1);
    std::string adic_numeral;
    std::uint32_t adic_bits = 64;
    auto* adic_eval = adic->add_subcommand(
        "eval", "Rational bracket around the value at a 2-adic index");
    adic_eval->add_option("numeral", adic_numeral, "2-adic numeral")->required();
    adic_eval->add_option("--bits", adic_bits, "Bracket precision (default 64)");
    auto* adic_value = adic->add_subcommand(
        "value", "Exact rational value of a finite or periodic numeral");
    adic_value->add_option("numeral", adic_numeral, "2-adic numeral")->required();
    std::uint64_t adic_ones = 0;
    auto* adic_trunc = adic->add_subcommand(
        "truncate", "Natural index keeping the lowest m set bits");
    adic_trunc->add_option("numeral", adic_numeral, "2-adic numeral")->required();
    adic_trunc->add_option("m", adic_ones, "How many set bits to keep")
        ->required();

    std::string const_name;
    std::uint32_t const_bits = 64;
    auto* constant = app.add_subcommand(
        "const", "Bracket a built-in constant (sqrt2, phi, e)");
    constant->add_option("name", const_name, "sqrt2 | phi | e")->required();
    constant->add_option("--bits", const_bits, "Bracket precision (default 64)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the diagnostic to stderr
        return kExitUsage;
    }

    try {
        if (*eval) {
            cmd_eval(index_arg, eval_bits);
        } else if (*locate) {
            cmd_locate(locate_arg);
        } else if (*cf) {
            cmd_cf(cf_arg, cf_lenient);
        } else if (*list) {
            cmd_list(list_count);
        } else if (*kepler) {
            if (kepler_depth < 0 || kepler_depth > 61) {
                std::cerr << "ratseq: --depth must be in [0, 61], got "
                          << kepler_depth << "\n";
                return kExitUsage;
            }
            cmd_kepler(kepler_depth, kepler_dot, kepler_json);
        } else if (*adic) {
            if (*adic_eval)
                print_bracket(parse_adic(adic_numeral).get(), adic_bits);
            else if (*adic_value)
                cmd_adic_value(adic_numeral);
            else if (*adic_trunc)
                cmd_adic_truncate(adic_numeral, adic_ones);
        } else if (*constant) {
            cmd_const(const_name, const_bits);
        }
    } catch (const CommandError& e) {
        std::cerr << "ratseq: " << e.message << "\n";
        return e.status == RATSEQ_ERROR_ARGUMENT ? kExitUsage : kExitDomain;
    }
    return 0;
}
