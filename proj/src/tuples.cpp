#include "cartanlift/tuples.hpp"

namespace cartanlift {

std::vector<CycTuple> all_cyc_tuples(int r, int degree) {
    std::vector<CycTuple> out;
    CycTuple cur{r, {}};
    // depth-first over adjacent-distinct tuples of length degree+1
    struct Rec {
        int r, len;
        std::vector<CycTuple>& out;
        void go(CycTuple& cur) {
            if (static_cast<int>(cur.entries.size()) == len) {
                out.push_back(cur);
                return;
            }
            for (int v = 0; v < r; ++v) {
                if (!cur.entries.empty() && cur.entries.back() == v) continue;
                cur.entries.push_back(v);
                go(cur);
                cur.entries.pop_back();
            }
        }
    } rec{r, degree + 1, out};
    rec.go(cur);
    return out;
}

}  // namespace cartanlift
