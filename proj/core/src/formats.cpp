#include "weave/formats.hpp"

#include <numeric>

#include <json.hpp>

namespace weave {

WeaveDocument parse_text(std::string_view text) {
    return WeaveDocument{from_text(text), std::nullopt, {}};
}

std::string serialize_text(const WeaveDocument& doc) { return to_text(doc.matrix); }

std::string to_json(const WeaveDocument& doc, int indent) {
    nlohmann::json j;
    j["format"] = "weave/1";
    j["m"] = doc.matrix.warps();
    j["n"] = doc.matrix.wefts();
    auto rows = nlohmann::json::array();
    for (int i = 0; i < doc.matrix.warps(); ++i) {
        std::string row;
        for (int jj = 0; jj < doc.matrix.wefts(); ++jj) row.push_back(doc.matrix.at(i, jj) ? '1' : '0');
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    if (doc.name) j["name"] = *doc.name;
    if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
    return j.dump(indent);
}

WeaveDocument from_json(const std::string& json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "weave/1") {
        throw std::invalid_argument("expected a weave/1 document");
    }
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    const auto& rows = j.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != m) {
        throw std::invalid_argument("rows count does not match m");
    }
    CrossingMatrix M(m, n);
    for (int i = 0; i < m; ++i) {
        const std::string row = rows[i].get<std::string>();
        if (static_cast<int>(row.size()) != n) {
            throw std::invalid_argument("row " + std::to_string(i + 1) + ": expected " +
                                        std::to_string(n) + " columns, got " +
                                        std::to_string(row.size()));
        }
        for (int jj = 0; jj < n; ++jj) {
            if (row[jj] != '0' && row[jj] != '1') {
                throw std::invalid_argument("row " + std::to_string(i + 1) + ", column " +
                                            std::to_string(jj + 1) + ": invalid character '" +
                                            std::string(1, row[jj]) + "'");
            }
            M.set(i, jj, row[jj] == '1');
        }
    }
    WeaveDocument doc;
    doc.matrix = std::move(M);
    if (j.contains("name")) doc.name = j.at("name").get<std::string>();
    if (j.contains("metadata")) {
        doc.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    }
    return doc;
}

WeaveDocument plain(int m, int n) {
    if (m < 2 || n < 2 || m % 2 != 0 || n % 2 != 0) {
        throw std::invalid_argument("plain weave requires even m and n");
    }
    WeaveDocument doc;
    doc.matrix = CrossingMatrix(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) doc.matrix.set(i, j, (i + j) % 2);
    doc.name = "plain-" + std::to_string(m) + "x" + std::to_string(n);
    doc.metadata = {{"family", "plain"}};
    return doc;
}

WeaveDocument twill(int m, int n, int over, int under) {
    if (over < 1 || under < 1) throw std::invalid_argument("twill requires over, under >= 1");
    const int period = over + under;
    if (n % period != 0) {
        throw std::invalid_argument("twill requires over+under to divide n");
    }
    if (m % period != 0) {
        throw std::invalid_argument("twill requires m to be a multiple of over+under");
    }
    WeaveDocument doc;
    doc.matrix = CrossingMatrix(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            doc.matrix.set(i, j, ((j - i) % period + period) % period < over);
        }
    doc.name = "twill-" + std::to_string(m) + "x" + std::to_string(n) + "-" +
               std::to_string(over) + "-" + std::to_string(under);
    doc.metadata = {{"family", "twill"},
                    {"over", std::to_string(over)},
                    {"under", std::to_string(under)}};
    return doc;
}

WeaveDocument satin(int n, int step) {
    if (n < 5) throw std::invalid_argument("satin requires n >= 5");
    const int s = ((step % n) + n) % n;
    if (std::gcd(s, n) != 1) throw std::invalid_argument("satin requires gcd(step, n) = 1");
    if (s == 1 || s == n - 1) {
        throw std::invalid_argument("satin requires step not congruent to +-1 mod n");
    }
    WeaveDocument doc;
    doc.matrix = CrossingMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        doc.matrix.set(i, static_cast<int>((static_cast<long long>(s) * i) % n), 1);
    }
    doc.name = "satin-" + std::to_string(n) + "-" + std::to_string(step);
    doc.metadata = {{"family", "satin"}, {"step", std::to_string(step)}};
    return doc;
}

std::string render(const WeaveDocument& doc, RenderStyle style) {
    const CrossingMatrix& M = doc.matrix;
    if (style == RenderStyle::Ascii) {
        std::string out;
        for (int i = 0; i < M.warps(); ++i) {
            if (i > 0) out.push_back('\n');
            for (int j = 0; j < M.wefts(); ++j) out.push_back(M.at(i, j) ? '#' : '.');
        }
        return out;
    }

    constexpr int cell = 20;
    const int width = M.wefts() * cell, height = M.warps() * cell;
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width + 2) + "\" height=\"" + std::to_string(height + 2) +
           "\" viewBox=\"-1 -1 " + std::to_string(width + 2) + " " + std::to_string(height + 2) +
           "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (int i = 0; i < M.warps(); ++i) {
        for (int j = 0; j < M.wefts(); ++j) {
            if (!M.at(i, j)) continue;
            svg += "<rect class=\"cell\" x=\"" + std::to_string(j * cell) + "\" y=\"" +
                   std::to_string(i * cell) + "\" width=\"" + std::to_string(cell) +
                   "\" height=\"" + std::to_string(cell) + "\" fill=\"black\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace weave
