#include "qexmul/table_cases.hpp"

namespace qexmul {

const std::array<TableCase, 16> kReferenceCases = {{
    {1, "3", "5", "15", 100000, 4, 4, false, 1},
    {2, "33", "100", "3300", 100000, 12, 7, false, 2},
    {3, "2345", "5678", "13314910", 100000, 24, 9, false, 3},
    {4, "234501", "567801", "133149902301", 100000, 37, 11, false, 4},
    {5, "23450101", "56780101", "1331499103240201", 1000000, 51, 11, false, 5},
    {6, "2345010101", "5678010101", "13314991040425030201", 1000000, 64, 12, false, 6},
    {7, "8978923748987", "8984957438475849", "80675247727968202502337714963", 5000000,
     97, 13, false, 7},
    {8, "24587098456973459873", "93847898723487384738",
     "2307447525894458211799840656192155618274", 50000000, 131, 15, false, 8},
    {9, "98734587398457983758948", "87234593847548978394754",
     "8613071630409809722603055112891858675923758792", 50000000, 153, 15, false, 9},
    {10, "87349853987589789837437878", "94543085490894758478947548",
     "8258324713165875922142248753007708733319714270423144", 50000000, 173, 15, false, 10},
    {11, "98734574983957438978459843787", "91398475934873485748398475397",
     "9024189675611195666675703027302141983724295908377582808439", 100000000, 193, 15,
     false, 11},
    {12, "87892734987329734982798374239878729", "99787498783927389473829348739287348",
     "8770596185664218247269027408953463166804991960126150471650153404020692",
     100000000, 233, 15, false, 12},
    {13, "98789236479326873476287376473627847267623",
     "92934837483278492837489283478928374829373",
     "9180961637303410170533798160931075913254844659074625888400424445374174806892290379",
     100000000, 273, 17, false, 2},
    {14, "0.567", "0.0004", "0.0002268", 100000, 12, 7, false, 14},
    {15, "2.5", "1.75", "4.375", 100000, 13, 7, false, 15},
    {16, "136872.345502", "2343651.74543455", "320781111437.483078727894100", 5000000,
     89, 13, true, 16},
}};

}  // namespace qexmul
