#include "dsym/fixtures.hpp"

namespace dsym::fixtures {

const std::vector<long long> kGenerators3 = {1,    1,    3,    7,    17,   41,  99,
                                             239,  577,  1393, 3363, 8119, 19601};

const std::vector<long long> kGenerators4 = {1,    1,     3,      13,     47,     173,   639,
                                             2357, 8695,  32077,  118335, 436549, 1610471};

const std::vector<std::string> kS3RecoilCodes = {"333", "332", "323", "322", "331", "321"};

const std::vector<std::string> kS4RecoilCodes = {
    "3333", "3332", "3323", "3322", "3331", "3321", "3233", "3232",
    "3223", "3223", "3232", "3222", "3313", "3312", "3213", "3213",
    "3312", "3212", "3331", "3321", "3231", "3221", "3311", "3211"};

const std::vector<std::pair<std::string, std::string>> kS4DoubletonClasses = {
    {"1423", "4123"}, {"1432", "4132"}, {"2143", "2413"},
    {"2314", "2341"}, {"3142", "3412"}, {"3214", "3241"}};

const std::vector<CodeFixture> kDescentCodeFixtures = {
    {"85736124", 3, "32212123"},
    {"426135", 3, "323123"},
    {"426135", 4, "434133"},
};

const CodeFixture kRecoilCodeFixture = {"425163", 3, "323123"};

const std::vector<std::string> kWindowPattern85736124 = {"312", "231", "312",
                                                         "231", "312", "123"};
const std::string kWindowCode85736124 = "32212123";

const std::vector<std::string> kProduct42531x1 = {"425316", "425361", "425631",
                                                  "426531", "462531", "642531"};

const std::vector<std::string> kProduct21543x1 = {"215436", "215463", "215643",
                                                  "216543", "261543", "621543"};

const std::vector<std::pair<std::string, std::string>> kCoproduct42531 = {
    {"42531", "e"}, {"3142", "1"}, {"213", "21"},
    {"21", "321"},  {"1", "2431"}, {"e", "42531"}};

const std::vector<std::pair<std::string, std::string>> kCoproduct21543 = {
    {"21543", "e"}, {"2143", "1"}, {"213", "21"},
    {"21", "321"},  {"1", "1432"}, {"e", "21543"}};

const std::vector<std::string> kRibbonProduct321x3321 = {"3211221", "3211321", "3212321",
                                                         "3213321"};

// E_{3,3} = t1t2 + t1t3 + 2 t2t3 + t2^2 + t3^2
const PolyFixture kEulerian33 = {
    {{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 2}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}};

// E_{4,3} = t1^2 t2 + t1^2 t3 + 2 t1 t2^2 + 7 t1t2t3 + 3 t1 t3^2
//           + t2^3 + 5 t2^2 t3 + 3 t2 t3^2 + t3^3
const PolyFixture kEulerian43 = {
    {{2, 1, 0}, 1}, {{2, 0, 1}, 1}, {{1, 2, 0}, 2}, {{1, 1, 1}, 7}, {{1, 0, 2}, 3},
    {{0, 3, 0}, 1}, {{0, 2, 1}, 5}, {{0, 1, 2}, 3}, {{0, 0, 3}, 1}};

// M_{3,3} = q1^2 q2 + q1^2 q3 + q2^2 q3 + q2^3 + q2 q3^2 + q3^3
const PolyFixture kMajor33 = {{{2, 1, 0}, 1}, {{2, 0, 1}, 1}, {{0, 2, 1}, 1},
                              {{0, 3, 0}, 1}, {{0, 1, 2}, 1}, {{0, 0, 3}, 1}};

const std::vector<long long> kClassicalEulerian4 = {1, 11, 11, 1};

}  // namespace dsym::fixtures
