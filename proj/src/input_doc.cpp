#include "jetvpa/input_doc.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace jetvpa {

namespace {

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string word;
    while (in >> word) out.push_back(word);
    return out;
}

struct Line {
    int number;  // 1-based
    std::string text;
};

long parse_int(const Line& line, const std::string& text) {
    try {
        size_t used = 0;
        long value = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw ParseError(line.number, 1, "expected an integer, got '" + text + "'");
    }
}

// splits "key = value"; returns false when there is no '='
bool key_value(const std::string& text, std::string& key, std::string& value) {
    size_t eq = text.find('=');
    if (eq == std::string::npos) return false;
    key = strip(text.substr(0, eq));
    value = strip(text.substr(eq + 1));
    return true;
}

class DocBuilder {
  public:
    InputDoc finish(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            size_t comment = raw.find('#');
            if (comment != std::string::npos) raw = raw.substr(0, comment);
            std::string body = strip(raw);
            if (body.empty()) continue;
            handle(Line{number, body});
        }
        finalize_section();
        return std::move(doc_);
    }

  private:
    enum class Section { none, presentation, brackets, lie, options };

    InputDoc doc_;
    Section section_ = Section::none;
    // presentation in progress
    int pres_generators_ = 0;
    std::vector<std::string> pres_names_;
    std::vector<std::pair<int, std::string>> pres_relations_;  // line, text
    // brackets in progress
    int br_generators_ = 0;
    std::vector<std::string> br_names_;
    std::vector<std::tuple<int, std::string, std::string, std::string>> br_entries_;
    // lie in progress
    int lie_dimension_ = 0;
    std::vector<std::string> lie_basis_;
    std::vector<std::tuple<int, std::string, std::string, std::string, std::string>> lie_entries_;

    void handle(const Line& line) {
        if (line.text.front() == '[') {
            if (line.text.back() != ']')
                throw ParseError(line.number, 1, "unterminated section header");
            finalize_section();
            std::string name = line.text.substr(1, line.text.size() - 2);
            if (name == "presentation")
                section_ = Section::presentation;
            else if (name == "brackets")
                section_ = Section::brackets;
            else if (name == "lie_algebra")
                section_ = Section::lie;
            else if (name == "options")
                section_ = Section::options;
            else
                throw ParseError(line.number, 1, "unknown section [" + name + "]");
            return;
        }
        switch (section_) {
            case Section::none:
                throw ParseError(line.number, 1, "content before any [section] header");
            case Section::presentation: presentation_line(line); break;
            case Section::brackets: brackets_line(line); break;
            case Section::lie: lie_line(line); break;
            case Section::options: options_line(line); break;
        }
    }

    void presentation_line(const Line& line) {
        std::string key, value;
        if (!key_value(line.text, key, value))
            throw ParseError(line.number, 1, "expected 'key = value'");
        if (key == "generators") {
            pres_generators_ = static_cast<int>(parse_int(line, value));
        } else if (key == "names") {
            pres_names_ = split_ws(value);
        } else if (key == "relation") {
            pres_relations_.push_back({line.number, value});
        } else {
            throw ParseError(line.number, 1, "unknown presentation key '" + key + "'");
        }
    }

    void brackets_line(const Line& line) {
        std::string key, value;
        if (!key_value(line.text, key, value))
            throw ParseError(line.number, 1, "expected 'key = value'");
        if (key == "generators") {
            br_generators_ = static_cast<int>(parse_int(line, value));
            return;
        }
        if (key == "names") {
            br_names_ = split_ws(value);
            return;
        }
        // {a,b} = poly
        if (key.size() >= 5 && key.front() == '{' && key.back() == '}') {
            std::string inner = key.substr(1, key.size() - 2);
            size_t comma = inner.find(',');
            if (comma == std::string::npos)
                throw ParseError(line.number, 1, "bracket entry needs '{a,b}'");
            br_entries_.push_back({line.number, strip(inner.substr(0, comma)),
                                   strip(inner.substr(comma + 1)), value});
            return;
        }
        throw ParseError(line.number, 1, "unknown brackets key '" + key + "'");
    }

    void lie_line(const Line& line) {
        std::string key, value;
        if (!key_value(line.text, key, value))
            throw ParseError(line.number, 1, "expected 'key = value'");
        if (key == "dimension") {
            lie_dimension_ = static_cast<int>(parse_int(line, value));
            return;
        }
        if (key == "basis") {
            lie_basis_ = split_ws(value);
            return;
        }
        // "c i j k = value" (indices or names)
        std::vector<std::string> parts = split_ws(key);
        if (parts.size() == 4 && parts[0] == "c") {
            lie_entries_.push_back({line.number, parts[1], parts[2], parts[3], value});
            return;
        }
        throw ParseError(line.number, 1,
                         "unknown lie_algebra key '" + key + "' (expected 'c i j k = value')");
    }

    void options_line(const Line& line) {
        std::string key, value;
        if (!key_value(line.text, key, value))
            throw ParseError(line.number, 1, "expected 'key = value'");
        doc_.options[key] = value;
    }

    int resolve_generator(const Line& line, const std::string& token,
                          const std::vector<std::string>& names, int count) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == token) return static_cast<int>(i) + 1;
        // fall back to an index or an x{j}_1 form
        try {
            size_t used = 0;
            int idx = std::stoi(token, &used);
            if (used == token.size() && idx >= 1 && idx <= count) return idx;
        } catch (const std::exception&) {
        }
        Polynomial p;
        try {
            p = parse_polynomial(token);
        } catch (const ParseError&) {
            throw ParseError(line.number, 1, "unknown generator '" + token + "'");
        }
        auto vars = p.variables();
        if (vars.size() == 1 && vars.begin()->level == 1 && vars.begin()->gen <= count &&
            p == Polynomial::variable(*vars.begin()))
            return vars.begin()->gen;
        throw ParseError(line.number, 1, "unknown generator '" + token + "'");
    }

    void install_names(const std::vector<std::string>& names) {
        for (size_t i = 0; i < names.size(); ++i)
            doc_.names[names[i]] = base_var(static_cast<int>(i) + 1);
    }

    void finalize_section() {
        switch (section_) {
            case Section::presentation: finalize_presentation(); break;
            case Section::brackets: finalize_brackets(); break;
            case Section::lie: finalize_lie(); break;
            default: break;
        }
        section_ = Section::none;
    }

    void finalize_presentation() {
        if (pres_generators_ == 0 && !pres_names_.empty())
            pres_generators_ = static_cast<int>(pres_names_.size());
        if (pres_generators_ <= 0)
            throw ParseError(1, 1, "[presentation] needs 'generators = N'");
        if (!pres_names_.empty() &&
            static_cast<int>(pres_names_.size()) != pres_generators_)
            throw ParseError(1, 1, "[presentation] names do not match generator count");
        install_names(pres_names_);

        Presentation pres;
        pres.num_generators = pres_generators_;
        pres.names = pres_names_;
        for (const auto& [number, text] : pres_relations_)
            pres.relations.push_back(parse_polynomial_at(text, number - 1, &doc_.names));
        pres.validate();
        doc_.presentation = std::move(pres);
        pres_generators_ = 0;
        pres_names_.clear();
        pres_relations_.clear();
    }

    void finalize_brackets() {
        if (br_generators_ == 0 && !br_names_.empty())
            br_generators_ = static_cast<int>(br_names_.size());
        if (br_generators_ <= 0) throw ParseError(1, 1, "[brackets] needs 'generators = N'");
        if (!br_names_.empty() && static_cast<int>(br_names_.size()) != br_generators_)
            throw ParseError(1, 1, "[brackets] names do not match generator count");
        install_names(br_names_);

        PoissonStructure ps(br_generators_);
        for (const auto& [number, a, b, poly_text] : br_entries_) {
            Line line{number, poly_text};
            int ga = resolve_generator(line, a, br_names_, br_generators_);
            int gb = resolve_generator(line, b, br_names_, br_generators_);
            ps.set_bracket(ga, gb, parse_polynomial_at(poly_text, number - 1, &doc_.names));
        }
        doc_.brackets = std::move(ps);
        br_generators_ = 0;
        br_names_.clear();
        br_entries_.clear();
    }

    void finalize_lie() {
        if (lie_dimension_ == 0 && !lie_basis_.empty())
            lie_dimension_ = static_cast<int>(lie_basis_.size());
        if (lie_dimension_ <= 0) throw ParseError(1, 1, "[lie_algebra] needs 'dimension = N'");
        if (!lie_basis_.empty() && static_cast<int>(lie_basis_.size()) != lie_dimension_)
            throw ParseError(1, 1, "[lie_algebra] basis does not match dimension");
        install_names(lie_basis_);

        LieAlgebraData data;
        data.dimension = lie_dimension_;
        data.basis = lie_basis_;
        if (data.basis.empty())
            for (int i = 1; i <= lie_dimension_; ++i)
                data.basis.push_back("x" + std::to_string(i));
        for (const auto& [number, i, j, k, value] : lie_entries_) {
            Line line{number, value};
            int gi = resolve_generator(line, i, data.basis, lie_dimension_);
            int gj = resolve_generator(line, j, data.basis, lie_dimension_);
            int gk = resolve_generator(line, k, data.basis, lie_dimension_);
            Polynomial v = parse_polynomial_at(value, number - 1, &doc_.names);
            if (!v.is_constant())
                throw ParseError(number, 1, "structure constant must be a rational");
            data.set_constant(gi, gj, gk, v.constant_term());
        }
        doc_.lie = std::move(data);
        lie_dimension_ = 0;
        lie_basis_.clear();
        lie_entries_.clear();
    }
};

}  // namespace

InputDoc parse_input(const std::string& text) { return DocBuilder().finish(text); }

}  // namespace jetvpa
