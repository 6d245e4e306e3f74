#include "brownlab/io.hpp"

#include <charconv>
#include <vector>

#include "brownlab/errors.hpp"

namespace brownlab {

Encoding preferred_encoding(std::size_t length) {
    return length < kPlainEncodingLimit ? Encoding::Plain : Encoding::Rle;
}

std::string encode_body(const Coloring& c, Encoding enc) {
    std::string out;
    const auto vals = c.values();
    if (enc == Encoding::Plain) {
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(vals[i]);
        }
        return out;
    }
    for (std::size_t i = 0; i < vals.size();) {
        std::size_t j = i;
        while (j < vals.size() && vals[j] == vals[i]) ++j;
        if (!out.empty()) out += ' ';
        out += std::to_string(vals[i]) + "x" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string encode_coloring(const Coloring& c, Encoding enc) {
    std::string out = "palette " + std::to_string(c.palette()) + " length " +
                      std::to_string(c.length()) + " encoding " +
                      (enc == Encoding::Plain ? "plain" : "rle") + "\n";
    out += encode_body(c, enc);
    out += '\n';
    return out;
}

namespace {

struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

// Splits on whitespace, tracking 1-based positions. line_offset shifts line numbers.
std::vector<Token> tokenize(std::string_view text, std::size_t line_offset = 0) {
    std::vector<Token> out;
    std::size_t line = 1 + line_offset;
    std::size_t col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++col;
            ++i;
            continue;
        }
        const std::size_t begin = i;
        const std::size_t begin_col = col;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' &&
               text[i] != '\n') {
            ++i;
            ++col;
        }
        out.push_back({text.substr(begin, i - begin), line, begin_col});
    }
    return out;
}

std::uint64_t parse_natural(std::string_view s, const Token& at, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError(std::string("expected ") + what + ", got '" + std::string(at.text) + "'",
                         at.line, at.column);
    }
    return v;
}

Color parse_color(std::string_view s, const Token& at, Color palette) {
    const auto v = parse_natural(s, at, "a color index");
    if (v >= palette) {
        throw ParseError("color " + std::to_string(v) + " is outside palette " +
                         std::to_string(palette),
                         at.line, at.column);
    }
    return static_cast<Color>(v);
}

Coloring decode_tokens(const std::vector<Token>& body, Color palette, std::size_t length,
                       Encoding enc, std::size_t eof_line) {
    std::vector<Color> values;
    values.reserve(length);
    for (const auto& tok : body) {
        if (enc == Encoding::Plain) {
            values.push_back(parse_color(tok.text, tok, palette));
        } else {
            const auto x = tok.text.find('x');
            if (x == std::string_view::npos) {
                throw ParseError("rle token must look like <value>x<count>", tok.line, tok.column);
            }
            const Color v = parse_color(tok.text.substr(0, x), tok, palette);
            const auto count = parse_natural(tok.text.substr(x + 1), tok, "a run count");
            if (count == 0) throw ParseError("rle run count must be >= 1", tok.line, tok.column);
            if (values.size() + count > length) {
                throw ParseError("body is longer than the declared length " +
                                     std::to_string(length),
                                 tok.line, tok.column);
            }
            values.insert(values.end(), count, v);
        }
        if (values.size() > length) {
            throw ParseError("body is longer than the declared length " + std::to_string(length),
                             tok.line, tok.column);
        }
    }
    if (values.size() != length) {
        throw ParseError("body has " + std::to_string(values.size()) +
                             " positions but the header declares " + std::to_string(length),
                         eof_line, 0);
    }
    return Coloring(palette, std::move(values));
}

}  // namespace

Coloring decode_rle_body(std::string_view body, Color palette, std::size_t length) {
    return decode_tokens(tokenize(body), palette, length, Encoding::Rle, 1);
}

Coloring decode_coloring(std::string_view text) {
    const auto nl = text.find('\n');
    const std::string_view header = text.substr(0, nl);
    const std::string_view rest = nl == std::string_view::npos ? "" : text.substr(nl + 1);
    const auto h = tokenize(header);
    if (h.size() != 6 || h[0].text != "palette" || h[2].text != "length" ||
        h[4].text != "encoding") {
        throw ParseError("header must be 'palette <r> length <n> encoding <plain|rle>'", 1,
                         h.empty() ? 1 : h.front().column);
    }
    const auto palette = parse_natural(h[1].text, h[1], "a palette size");
    if (palette == 0 || palette > 0xFFFFFFFFULL) {
        throw ParseError("palette must be between 1 and 2^32-1", h[1].line, h[1].column);
    }
    const auto length = parse_natural(h[3].text, h[3], "a length");
    Encoding enc;
    if (h[5].text == "plain") {
        enc = Encoding::Plain;
    } else if (h[5].text == "rle") {
        enc = Encoding::Rle;
    } else {
        throw ParseError("encoding must be 'plain' or 'rle'", h[5].line, h[5].column);
    }
    std::size_t lines = 1;
    for (const char ch : rest) lines += ch == '\n';
    return decode_tokens(tokenize(rest, 1), static_cast<Color>(palette), length, enc, lines);
}

nlohmann::json certificate_to_json(const WitnessCertificate& cert) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : cert.classes) {
        nlohmann::json triples = nlohmann::json::array();
        for (const auto& t : cls.triples) triples.push_back({t.gap, t.max_run, t.threshold});
        classes.push_back({{"color", cls.color}, {"triples", triples}});
    }
    return {
        {"palette", cert.coloring.palette()},
        {"length", cert.coloring.length()},
        {"growth", cert.growth.spec()},
        {"coloring", encode_body(cert.coloring, Encoding::Rle)},
        {"classes", classes},
    };
}

WitnessCertificate certificate_from_json(const nlohmann::json& doc) {
    try {
        const auto palette = doc.at("palette").get<Color>();
        const auto length = doc.at("length").get<std::size_t>();
        WitnessCertificate cert{
            decode_rle_body(doc.at("coloring").get<std::string>(), palette, length),
            GrowthFn::parse(doc.at("growth").get<std::string>()),
            {}};
        for (const auto& cls : doc.at("classes")) {
            ClassCertificate cc;
            cc.color = cls.at("color").get<Color>();
            for (const auto& t : cls.at("triples")) {
                if (!t.is_array() || t.size() != 3) {
                    throw InvalidArgument("certificate triple must have three entries");
                }
                cc.triples.push_back({t[0].get<std::uint64_t>(), t[1].get<std::uint64_t>(),
                                      t[2].get<std::uint64_t>()});
            }
            cert.classes.push_back(std::move(cc));
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed certificate: ") + e.what());
    }
}

nlohmann::json violation_to_json(const Violation& v, const FiniteSet& color_class) {
    std::vector<Position> elems;
    for (std::size_t i = v.window.first; i <= v.window.last; ++i) elems.push_back(color_class[i]);
    return {
        {"color", v.color},
        {"start_index", v.window.first},
        {"end_index", v.window.last},
        {"gap_size", v.gap_size},
        {"length", v.length()},
        {"threshold", v.threshold},
        {"window", elems},
    };
}

}  // namespace brownlab
