#include "render.hpp"

#include <sstream>
#include <stdexcept>

#include "rat.hpp"

namespace wrac {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string num(const Rat& r) { return decimal_string(r); }

}  // namespace

std::string to_svg(const Representation& rep,
                   const std::map<std::string, std::string>& labels,
                   const RenderOptions& options) {
    if (!overlap_free(rep)) throw std::invalid_argument("to_svg: boxes overlap");
    if (options.margin.sign() < 0)
        throw std::invalid_argument("to_svg: margin must be nonnegative");
    if (options.font_fit.sign() <= 0)
        throw std::invalid_argument("to_svg: font fit factor must be positive");

    BoundingBox bb{Rat(0), Rat(0), Rat(0), Rat(0)};
    if (!rep.boxes.empty()) bb = bounding_box(rep);
    const Rat m = options.margin;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(bb.xmin - m) << " "
        << num(Rat(0) - bb.ymax - m) << " " << num(bb.w() + m + m) << " "
        << num(bb.h() + m + m) << "\" font-family=\"monospace\">\n";
    svg << "<title>word cloud</title>\n";

    for (const PlacedBox& b : rep.boxes) {
        svg << "<rect x=\"" << num(b.left()) << "\" y=\"" << num(Rat(0) - b.top())
            << "\" width=\"" << num(b.w) << "\" height=\"" << num(b.h)
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.0625\"><title>"
            << xml_escape(b.id) << "</title></rect>\n";
    }
    for (const PlacedBox& b : rep.boxes) {
        const auto it = labels.find(b.id);
        const std::string& label = it == labels.end() ? b.id : it->second;
        svg << "<text x=\"" << num(b.left() + b.w / Rat(2)) << "\" y=\""
            << num(Rat(0) - b.bottom() - b.h / Rat(2)) << "\" font-size=\""
            << num(b.h * options.font_fit)
            << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << xml_escape(label)
            << "</text>\n";
    }

    if (options.contact_overlay) {
        for (const Contact& c : contacts(rep)) {
            const PlacedBox& a = rep.boxes[c.i];
            const PlacedBox& b = rep.boxes[c.j];
            Rat x1, y1, x2, y2;
            if (c.horizontal) {
                const Rat y = a.top() == b.bottom() ? a.top() : b.top();
                x1 = max(a.left(), b.left());
                x2 = min(a.right(), b.right());
                y1 = y2 = Rat(0) - y;
            } else {
                const Rat x = a.right() == b.left() ? a.right() : b.right();
                x1 = x2 = x;
                y1 = Rat(0) - min(a.top(), b.top());
                y2 = Rat(0) - max(a.bottom(), b.bottom());
            }
            svg << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
                << "\" y2=\"" << num(y2) << "\" stroke=\"red\" stroke-width=\"0.0625\"/>\n";
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace wrac
