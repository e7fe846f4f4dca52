#include "qpw/numeric.hpp"

namespace qpw {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw argument_error("empty rational literal");
    for (char c : text) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw argument_error("bad rational literal: " + text);
    }
    Rat q;
    if (q.set_str(text, 10) != 0) throw argument_error("bad rational literal: " + text);
    if (q.get_den() == 0) throw argument_error("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string int_str(const Int& z) { return z.get_str(); }

Int parse_int(const std::string& text) {
    if (text.empty()) throw argument_error("empty integer literal");
    Int z;
    if (z.set_str(text, 10) != 0) throw argument_error("bad integer literal: " + text);
    return z;
}

}  // namespace qpw
