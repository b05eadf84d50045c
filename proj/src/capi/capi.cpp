/* SPDX-License-Identifier: Apache-2.0 */

// C binding over the core library.  Handles own plain core values; every
// entry point catches and converts exceptions to status codes, so no
// exception crosses the ABI.

#include "ratseq.h"

#include "core/cf.hpp"
#include "core/kepler.hpp"
#include "core/rational.hpp"
#include "core/sequence.hpp"
#include "core/twoadic.hpp"

#include <cstring>
#include <new>
#include <string>

struct ratseq_rat {
    ratseq::SignedRational value;
};

struct ratseq_cf {
    ratseq::FiniteCF value;
};

struct ratseq_adic {
    ratseq::TwoAdicInteger value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) {
    g_last_error = what == nullptr ? "unknown error" : what;
}

template <typename Fn>
ratseq_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        g_last_error.clear();
        return RATSEQ_OK;
    } catch (const ratseq::ParseError& e) {
        set_error(e.what());
        return RATSEQ_ERROR_PARSE;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return RATSEQ_ERROR_DOMAIN;
    } catch (const std::overflow_error& e) {
        set_error(e.what());
        return RATSEQ_ERROR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return RATSEQ_ERROR_ARGUMENT;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return RATSEQ_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return RATSEQ_ERROR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool ok, const char* what) {
    if (!ok)
        throw std::invalid_argument(what);
}

}  // namespace

extern "C" {

const char* ratseq_last_error(void) {
    return g_last_error.c_str();
}

const char* ratseq_status_name(ratseq_status status) {
    switch (status) {
        case RATSEQ_OK: return "ok";
        case RATSEQ_ERROR_DOMAIN: return "domain error";
        case RATSEQ_ERROR_PARSE: return "parse error";
        case RATSEQ_ERROR_ARGUMENT: return "argument error";
        case RATSEQ_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void ratseq_string_free(char* text) {
    delete[] text;
}

/* ---- exact rationals -------------------------------------------------- */

ratseq_status ratseq_rat_parse(const char* text, ratseq_rat** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "NULL argument");
        *out = new ratseq_rat{ratseq::parse_signed_rational(text)};
    });
}

ratseq_status ratseq_rat_to_string(const ratseq_rat* r, char** out) {
    return guarded([&] {
        require(r != nullptr && out != nullptr, "NULL argument");
        *out = copy_string(r->value.str());
    });
}

ratseq_status ratseq_rat_cmp(const ratseq_rat* r, const ratseq_rat* s, int* out) {
    return guarded([&] {
        require(r != nullptr && s != nullptr && out != nullptr, "NULL argument");
        auto ord = r->value <=> s->value;
        *out = ord < 0 ? -1 : (ord > 0 ? 1 : 0);
    });
}

ratseq_status ratseq_rat_norm2(const ratseq_rat* r, ratseq_rat** out) {
    return guarded([&] {
        require(r != nullptr && out != nullptr, "NULL argument");
        *out = new ratseq_rat{ratseq::SignedRational(ratseq::norm2(r->value))};
    });
}

void ratseq_rat_free(ratseq_rat* r) {
    delete r;
}

/* ---- the sequence ------------------------------------------------------ */

ratseq_status ratseq_eval_index(const char* index_text, ratseq_rat** out) {
    return guarded([&] {
        require(index_text != nullptr && out != nullptr, "NULL argument");
        ratseq::Natural n = ratseq::parse_index_text(index_text);
        *out = new ratseq_rat{ratseq::SignedRational(ratseq::eval_index(n))};
    });
}

ratseq_status ratseq_locate(const ratseq_rat* value, char** index_out) {
    return guarded([&] {
        require(value != nullptr && index_out != nullptr, "NULL argument");
        if (value->value.sign() <= 0)
            throw std::domain_error("only strictly positive rationals occur "
                                    "in the sequence");
        *index_out = copy_string(ratseq::locate(value->value.magnitude()).str());
    });
}

ratseq_status ratseq_signed_term(const char* index_text, ratseq_rat** out) {
    return guarded([&] {
        require(index_text != nullptr && out != nullptr, "NULL argument");
        ratseq::Natural n = ratseq::parse_index_text(index_text);
        *out = new ratseq_rat{ratseq::signed_enum(n)};
    });
}

ratseq_status ratseq_first_terms(uint64_t count, char** out) {
    return guarded([&] {
        require(out != nullptr, "NULL argument");
        std::string lines;
        for (const auto& term : ratseq::first_terms(static_cast<std::size_t>(count))) {
            lines += term.value.str();
            lines += '\n';
        }
        *out = copy_string(lines);
    });
}

/* ---- continued fractions ---------------------------------------------- */

ratseq_status ratseq_cf_parse(const char* text, int lenient, ratseq_cf** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "NULL argument");
        *out = new ratseq_cf{ratseq::parse_cf(text, lenient != 0)};
    });
}

ratseq_status ratseq_cf_from_rat(const ratseq_rat* value, ratseq_cf** out) {
    return guarded([&] {
        require(value != nullptr && out != nullptr, "NULL argument");
        if (value->value.sign() <= 0)
            throw std::domain_error("continued fraction encoding requires a "
                                    "strictly positive rational");
        *out = new ratseq_cf{ratseq::encode_euclid(value->value.magnitude())};
    });
}

ratseq_status ratseq_cf_from_index(const char* index_text, ratseq_cf** out) {
    return guarded([&] {
        require(index_text != nullptr && out != nullptr, "NULL argument");
        ratseq::Natural n = ratseq::parse_index_text(index_text);
        *out = new ratseq_cf{ratseq::cf_from_gaps(ratseq::gaps_from_index(n))};
    });
}

ratseq_status ratseq_cf_to_string(const ratseq_cf* cf, char** out) {
    return guarded([&] {
        require(cf != nullptr && out != nullptr, "NULL argument");
        *out = copy_string(ratseq::render_cf(cf->value));
    });
}

ratseq_status ratseq_cf_value(const ratseq_cf* cf, ratseq_rat** out) {
    return guarded([&] {
        require(cf != nullptr && out != nullptr, "NULL argument");
        *out = new ratseq_rat{ratseq::eval_cf(cf->value)};
    });
}

ratseq_status ratseq_cf_index(const ratseq_cf* cf, char** index_out) {
    return guarded([&] {
        require(cf != nullptr && index_out != nullptr, "NULL argument");
        ratseq::Natural n =
            ratseq::index_from_gaps(ratseq::gaps_from_cf(cf->value));
        *index_out = copy_string(n.str());
    });
}

void ratseq_cf_free(ratseq_cf* cf) {
    delete cf;
}

/* ---- Kepler's tree ----------------------------------------------------- */

ratseq_status ratseq_kepler_text(uint32_t max_depth, char** out) {
    return guarded([&] {
        require(out != nullptr, "NULL argument");
        *out = copy_string(ratseq::kepler_to_text(max_depth));
    });
}

ratseq_status ratseq_kepler_dot(uint32_t max_depth, char** out) {
    return guarded([&] {
        require(out != nullptr, "NULL argument");
        *out = copy_string(ratseq::kepler_to_dot(max_depth));
    });
}

ratseq_status ratseq_kepler_json(uint32_t max_depth, char** out) {
    return guarded([&] {
        require(out != nullptr, "NULL argument");
        *out = copy_string(ratseq::kepler_to_json(max_depth));
    });
}

/* ---- 2-adic integers --------------------------------------------------- */

ratseq_status ratseq_adic_parse(const char* numeral, ratseq_adic** out) {
    return guarded([&] {
        require(numeral != nullptr && out != nullptr, "NULL argument");
        *out = new ratseq_adic{ratseq::TwoAdicInteger::parse(numeral)};
    });
}

ratseq_status ratseq_adic_constant(const char* name, ratseq_adic** out) {
    return guarded([&] {
        require(name != nullptr && out != nullptr, "NULL argument");
        std::string_view which(name);
        if (which == "sqrt2")
            *out = new ratseq_adic{ratseq::sqrt2_index()};
        else if (which == "phi")
            *out = new ratseq_adic{ratseq::phi_recip_index()};
        else if (which == "e")
            *out = new ratseq_adic{ratseq::e_index()};
        else
            throw std::invalid_argument("unknown constant \"" +
                                        std::string(which) +
                                        "\" (expected sqrt2, phi, or e)");
    });
}

ratseq_status ratseq_adic_render(const ratseq_adic* z, char** out) {
    return guarded([&] {
        require(z != nullptr && out != nullptr, "NULL argument");
        *out = copy_string(z->value.render());
    });
}

ratseq_status ratseq_adic_value(const ratseq_adic* z, ratseq_rat** out) {
    return guarded([&] {
        require(z != nullptr && out != nullptr, "NULL argument");
        *out = new ratseq_rat{z->value.rational_value()};
    });
}

ratseq_status ratseq_adic_eval(const ratseq_adic* z, uint32_t precision_bits,
                               ratseq_rat** lo, ratseq_rat** hi) {
    return guarded([&] {
        require(z != nullptr && lo != nullptr && hi != nullptr, "NULL argument");
        ratseq::RationalInterval interval = z->value.eval_real(precision_bits);
        *lo = new ratseq_rat{std::move(interval.lo)};
        *hi = new ratseq_rat{std::move(interval.hi)};
    });
}

ratseq_status ratseq_adic_truncate(const ratseq_adic* z, uint64_t ones_count,
                                   char** index_out) {
    return guarded([&] {
        require(z != nullptr && index_out != nullptr, "NULL argument");
        ratseq::Natural n = z->value.truncate(static_cast<std::size_t>(ones_count));
        *index_out = copy_string(n.str());
    });
}

void ratseq_adic_free(ratseq_adic* z) {
    delete z;
}

} /* extern "C" */
