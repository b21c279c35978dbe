#include "fourcycle/canonical.hpp"

#include <algorithm>
#include <sstream>

namespace fourcycle {

bool colex_less(const Triple& a, const Triple& b) {
    if (a[2] != b[2]) return a[2] < b[2];
    if (a[1] != b[1]) return a[1] < b[1];
    return a[0] < b[0];
}

namespace {

// Branch-and-bound over label assignments. Labels are assigned to support
// vertices only: an optimal labeling can always push isolated vertices past
// the support, where they cannot touch the triple list. `best` is always an
// achievable full list; a branch whose prefix exceeds it is cut, and a
// branch that improves on it immediately becomes the new best via a greedy
// completion (rebase), so comparisons stay anchored to an achievable list.
struct CanonSearch {
    std::vector<Triple> triples;       // relabeled to support ids 0..s-1
    int s = 0;                         // support size
    std::vector<std::vector<int>> at;  // triple indices per support vertex

    std::vector<int> new_label;        // support id -> label, -1 if unassigned
    std::vector<Triple> current;       // colex-sorted list of fully labeled triples
    std::vector<Triple> best;

    explicit CanonSearch(const TripleSystem& h) {
        std::vector<int> support_id(static_cast<size_t>(h.vertex_count()), -1);
        for (const Triple& t : h.triples())
            for (Vertex v : t)
                if (support_id[static_cast<size_t>(v)] < 0) support_id[static_cast<size_t>(v)] = s++;
        for (const Triple& t : h.triples()) {
            Triple r;
            for (int k = 0; k < 3; ++k)
                r[static_cast<size_t>(k)] =
                    support_id[static_cast<size_t>(t[static_cast<size_t>(k)])];
            std::sort(r.begin(), r.end());
            triples.push_back(r);
        }
        at.assign(static_cast<size_t>(s), {});
        for (size_t i = 0; i < triples.size(); ++i)
            for (Vertex v : triples[i]) at[static_cast<size_t>(v)].push_back(static_cast<int>(i));
    }

    std::vector<Triple> run() {
        best = triples;
        std::sort(best.begin(), best.end(), colex_less);
        new_label.assign(static_cast<size_t>(s), -1);
        current.clear();
        current.reserve(triples.size());
        dfs(0);
        return best;
    }

    // Triples completed by labeling v. Their max label is v's, so they extend
    // the colex-sorted list as one appended block.
    std::vector<Triple> block_for(int v) const {
        std::vector<Triple> block;
        for (int ti : at[static_cast<size_t>(v)]) {
            const Triple& t = triples[static_cast<size_t>(ti)];
            Triple img;
            bool full = true;
            for (int k = 0; k < 3; ++k) {
                int lab = new_label[static_cast<size_t>(t[static_cast<size_t>(k)])];
                if (lab < 0) { full = false; break; }
                img[static_cast<size_t>(k)] = lab;
            }
            if (!full) continue;
            std::sort(img.begin(), img.end());
            block.push_back(img);
        }
        std::sort(block.begin(), block.end(), colex_less);
        return block;
    }

    // Extend the current partial labeling with the unlabeled vertices in id
    // order and install the completed list as the new best.
    void rebase(int p) {
        std::vector<int> extra;
        size_t saved_len = current.size();
        for (int v = 0; v < s; ++v) {
            if (new_label[static_cast<size_t>(v)] >= 0) continue;
            new_label[static_cast<size_t>(v)] = p++;
            extra.push_back(v);
            for (const Triple& img : block_for(v)) current.push_back(img);
        }
        best = current;
        current.resize(saved_len);
        for (int v : extra) new_label[static_cast<size_t>(v)] = -1;
    }

    void dfs(int p) {
        if (p == s) return;  // a complete labeling here always equals best
        for (int v = 0; v < s; ++v) {
            if (new_label[static_cast<size_t>(v)] >= 0) continue;
            new_label[static_cast<size_t>(v)] = p;
            size_t saved_len = current.size();

            bool pruned = false;
            bool improved = false;
            for (const Triple& img : block_for(v)) {
                if (!improved) {
                    const Triple& ref = best[current.size()];
                    if (colex_less(ref, img)) { pruned = true; break; }
                    if (colex_less(img, ref)) improved = true;
                }
                current.push_back(img);
            }
            if (!pruned) {
                if (improved) rebase(p + 1);
                dfs(p + 1);
            }

            current.resize(saved_len);
            new_label[static_cast<size_t>(v)] = -1;
        }
    }
};

} // namespace

std::vector<Triple> canonical_triples(const TripleSystem& h) {
    if (h.triple_count() == 0) return {};
    CanonSearch cs(h);
    return cs.run();
}

TripleSystem canonical_form(const TripleSystem& h) {
    return TripleSystem(h.vertex_count(), canonical_triples(h));
}

bool is_isomorphic(const TripleSystem& a, const TripleSystem& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.triple_count() != b.triple_count()) return false;
    return canonical_triples(a) == canonical_triples(b);
}

std::string canonical_key(const TripleSystem& h) {
    std::ostringstream ss;
    ss << h.vertex_count() << ':';
    for (const Triple& t : canonical_triples(h)) ss << t[0] << ',' << t[1] << ',' << t[2] << ';';
    return ss.str();
}

} // namespace fourcycle
