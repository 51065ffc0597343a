#pragma once

// Minimal XML well-formedness checker for the SVG output tests. Validates
// balanced tags, quoted attribute values, legal entities and a single root
// element, and counts elements by tag and by (tag, class) for the
// element-count assertions. Independent of the rendering code on purpose.

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace testsupport {

struct XmlCheckResult {
    bool well_formed = false;
    std::string error;
    std::map<std::string, int> tag_counts;
    std::map<std::pair<std::string, std::string>, int> class_counts;  // (tag, class attr)

    int count(const std::string& tag) const {
        const auto it = tag_counts.find(tag);
        return it == tag_counts.end() ? 0 : it->second;
    }
    int count(const std::string& tag, const std::string& cls) const {
        const auto it = class_counts.find({tag, cls});
        return it == class_counts.end() ? 0 : it->second;
    }
};

inline XmlCheckResult check_xml(const std::string& text) {
    XmlCheckResult result;
    std::size_t pos = 0;
    std::vector<std::string> stack;
    int roots = 0;

    const auto fail = [&](const std::string& msg) {
        result.error = msg + " at offset " + std::to_string(pos);
        return result;
    };
    const auto is_name_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
               c == ':' || c == '.';
    };
    const auto valid_entity = [&](std::size_t at) {
        for (const char* e : {"&amp;", "&lt;", "&gt;", "&quot;", "&apos;"}) {
            if (text.compare(at, std::char_traits<char>::length(e), e) == 0) return true;
        }
        if (text.compare(at, 2, "&#") == 0) {
            std::size_t p = at + 2;
            if (p < text.size() && (text[p] == 'x' || text[p] == 'X')) ++p;
            std::size_t digits = 0;
            while (p < text.size() && std::isxdigit(static_cast<unsigned char>(text[p]))) {
                ++p;
                ++digits;
            }
            return digits > 0 && p < text.size() && text[p] == ';';
        }
        return false;
    };

    while (pos < text.size()) {
        if (text[pos] == '<') {
            if (text.compare(pos, 4, "<!--") == 0) {
                const std::size_t end = text.find("-->", pos + 4);
                if (end == std::string::npos) return fail("unterminated comment");
                pos = end + 3;
                continue;
            }
            if (text.compare(pos, 2, "<?") == 0) {
                const std::size_t end = text.find("?>", pos + 2);
                if (end == std::string::npos) return fail("unterminated declaration");
                pos = end + 2;
                continue;
            }
            if (text.compare(pos, 2, "</") == 0) {
                pos += 2;
                std::string name;
                while (pos < text.size() && is_name_char(text[pos])) name += text[pos++];
                while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (pos >= text.size() || text[pos] != '>') return fail("bad closing tag");
                ++pos;
                if (stack.empty() || stack.back() != name) {
                    return fail("mismatched closing tag </" + name + ">");
                }
                stack.pop_back();
                continue;
            }

            // Opening or self-closing tag.
            ++pos;
            std::string name;
            while (pos < text.size() && is_name_char(text[pos])) name += text[pos++];
            if (name.empty()) return fail("empty tag name");
            std::string class_attr;
            while (true) {
                while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (pos >= text.size()) return fail("unterminated tag <" + name + ">");
                if (text[pos] == '>' || text.compare(pos, 2, "/>") == 0) break;
                std::string attr;
                while (pos < text.size() && is_name_char(text[pos])) attr += text[pos++];
                if (attr.empty()) return fail("bad attribute in <" + name + ">");
                if (pos >= text.size() || text[pos] != '=') {
                    return fail("attribute '" + attr + "' missing '='");
                }
                ++pos;
                if (pos >= text.size() || (text[pos] != '"' && text[pos] != '\'')) {
                    return fail("attribute '" + attr + "' value not quoted");
                }
                const char quote = text[pos++];
                std::string value;
                while (pos < text.size() && text[pos] != quote) {
                    if (text[pos] == '<') return fail("raw '<' in attribute value");
                    if (text[pos] == '&' && !valid_entity(pos)) return fail("bad entity");
                    value += text[pos++];
                }
                if (pos >= text.size()) return fail("unterminated attribute value");
                ++pos;
                if (attr == "class") class_attr = value;
            }

            ++result.tag_counts[name];
            if (!class_attr.empty()) ++result.class_counts[{name, class_attr}];
            if (stack.empty()) ++roots;
            if (text[pos] == '/') {
                pos += 2;  // "/>"
            } else {
                ++pos;  // ">"
                stack.push_back(name);
                if (stack.size() == 1 && roots > 1) return fail("multiple root elements");
            }
            continue;
        }
        if (text[pos] == '&') {
            if (!valid_entity(pos)) return fail("bad entity in text");
            pos = text.find(';', pos) + 1;
            continue;
        }
        if (text[pos] == '>') return fail("stray '>' in text");
        if (!stack.empty() || std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        return fail("text outside the root element");
    }

    if (!stack.empty()) return fail("unclosed element <" + stack.back() + ">");
    if (roots != 1) return fail("expected exactly one root element");
    result.well_formed = true;
    return result;
}

}  // namespace testsupport
