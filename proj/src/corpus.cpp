#include "ringlab/corpus.hpp"

#include <fstream>

#include "ringlab/error.hpp"

namespace ringlab {

Corpus default_corpus() {
    Corpus corpus;
    corpus.version = "default-1";
    corpus.entries = {
        {"Z(2)", 2},
        {"Z(3)", 3},
        {"Z(4)", 4},
        {"Z(6)", 6},
        {"Z(8)", 8},
        {"Z(9)", 9},
        {"Z(12)", 12},
        {"Z(16)", 16},
        {"B(2)", 4},
        {"GF(2,2)", 4},
        {"GF(2,3)", 8},
        {"GF(3,2)", 9},
        {"M(2,Z(2))", 16},
        {"M(3,Z(2))", 512},
        {"M(2,Z(4))", 256},
        {"M(2,Z(3))", 81},
        {"M(2,Z(6))", 1296},
        {"M(2,GF(2,2))", 256},
        {"T(2,Z(2))", 8},
        {"T(3,Z(2))", 64},
        {"T(2,Z(4))", 64},
        {"BT(Z(2),1,2)", 128},
        {"TP(Z(2),3)", 8},
        {"TP(Z(4),2)", 16},
        {"TE(Z(2))", 4},
        {"TE(Z(4))", 16},
        {"DS(Z(2),Z(3))", 6},
        {"DS(TP(Z(2),2),M(2,Z(2)))", 64},
        {"GR(Z(2),C(2))", 4},
        {"GR(Z(2),CP(C(2),C(2)))", 16},
        {"GR(Z(4),C(2))", 16},
        {"GR(Z(2),C(3))", 8},
        {"GR(Z(3),C(2))", 9},
        {"GR(Z(3),C(3))", 27},
        {"GR(Z(2),D4)", 256},
        {"GR(Z(2),Q8)", 256},
        {"SUB(M(3,Z(2));[[0,0,1],[1,0,0],[0,1,0]])", 8},
        {"Q(Z(12);4)", 4},
        {"EX27(2,2)", 1024},
    };
    return corpus;
}

Corpus load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open corpus file " + path);
    Corpus corpus;
    corpus.version = "file:" + path;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r\n");
        corpus.entries.push_back({line.substr(first, last - first + 1), 0});
    }
    return corpus;
}

}  // namespace ringlab
