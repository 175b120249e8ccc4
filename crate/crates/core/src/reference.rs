//! Published reference values the computations are checked against.

use crate::exact::{parse_rational, Rational};

/// Chern numbers of the two 17-folds, in table order: monomial parts,
/// value for the first variety, value for the second.
pub const CHERN_NUMBERS: [(&[u32], &str, &str); 66] = [
    (&[17], "-12566964323536824", "-12566964323536824"),
    (&[15, 2], "-16120276856522016", "-17771184345938256"),
    (&[14, 3], "-10418778246653592", "-12069685736069832"),
    (&[13, 4], "-16955718164205288", "-20118448416029328"),
    (&[13, 2, 2], "-20017380823793664", "-23731960802953824"),
    (&[12, 5], "-17629884014664912", "-21561264608131872"),
    (&[12, 3, 2], "-12704878750253568", "-15676286308648848"),
    (&[11, 6], "-19868302036394160", "-24734418956664120"),
    (&[11, 4, 2], "-20280725863792512", "-25380656468947872"),
    (&[11, 3, 3], "-7981790182965696", "-10210025083273296"),
    (&[11, 2, 2, 2], "-23947738758721536", "-29939834074648176"),
    (&[10, 7], "-20981648718607848", "-26473467597046848"),
    (&[10, 5, 2], "-20643421387999488", "-26407977811451568"),
    (&[10, 4, 3], "-12600241652331024", "-16282668831769224"),
    (&[10, 3, 2, 2], "-14878855623247872", "-19207843059552912"),
    (&[9, 8], "-21640311771607104", "-27477296908130904"),
    (&[9, 6, 2], "-22725369462356352", "-29363935511099952"),
    (&[9, 5, 3], "-12667491348925152", "-16674977592147072"),
    (&[9, 4, 4], "-19648034664639552", "-25550516571066072"),
    (&[9, 4, 2, 2], "-23203089358654464", "-30140610675346224"),
    (&[9, 3, 3, 2], "-9130259521529856", "-12130917989089536"),
    (&[9, 2, 2, 2, 2], "-27402915124445184", "-35555242134916224"),
    (&[8, 7, 2], "-23382771727096320", "-30406320596710800"),
    (&[8, 6, 3], "-13755858825604608", "-18229439098901448"),
    (&[8, 5, 4], "-19485284047106400", "-25723444707610560"),
    (&[8, 5, 2, 2], "-23011236776890368", "-30344762098402848"),
    (&[8, 4, 3, 2], "-14045147931715392", "-18714726521158752"),
    (&[8, 3, 3, 3], "-5526623743186752", "-7534042519741392"),
    (&[8, 3, 2, 2, 2], "-16587436762066944", "-22077022229648784"),
    (&[7, 7, 3], "-13911339130144848", "-18499829570435568"),
    (&[7, 6, 4], "-20797455706552584", "-27558359677576944"),
    (&[7, 6, 2, 2], "-24561353964006144", "-32509349693941824"),
    (&[7, 5, 5], "-18992797533920064", "-25380945525785664"),
    (&[7, 5, 3, 2], "-13690228978704384", "-18466904154925584"),
    (&[7, 4, 4, 2], "-21236959469326080", "-28292854220232480"),
    (&[7, 4, 3, 3], "-8355975668453328", "-11390667286338288"),
    (&[7, 4, 2, 2, 2], "-25082627990780928", "-33375875438854368"),
    (&[7, 3, 3, 2, 2], "-9868440929252352", "-13437272003300352"),
    (&[7, 2, 2, 2, 2, 2], "-29626288313401344", "-39372018689971584"),
    (&[6, 6, 5], "-20045163757887552", "-26794314133031232"),
    (&[6, 6, 3, 2], "-14448969306563136", "-19495532608483536"),
    (&[6, 5, 4, 2], "-20468820683488704", "-27509835217218624"),
    (&[6, 5, 3, 3], "-8053707546698976", "-11076233891550336"),
    (&[6, 5, 2, 2, 2], "-24175413086373888", "-32452298318020608"),
    (&[6, 4, 4, 3], "-12493244792291808", "-16968762117951048"),
    (&[6, 4, 3, 2, 2], "-14755434031446528", "-20017535250734928"),
    (&[6, 3, 3, 3, 2], "-5805373830183936", "-8060435949465216"),
    (&[6, 3, 2, 2, 2, 2], "-17428190600921088", "-23614029246446208"),
    (&[5, 5, 5, 2], "-18692288718173184", "-25337872758579264"),
    (&[5, 5, 4, 3], "-11408947399354176", "-15629543395106976"),
    (&[5, 5, 3, 2, 2], "-13474616955015168", "-18437767402667328"),
    (&[5, 4, 4, 4], "-17698706221829376", "-23944319006461056"),
    (&[5, 4, 4, 2, 2], "-20904367685689344", "-28246298751476064"),
    (&[5, 4, 3, 3, 2], "-8224242734108160", "-11373973294302720"),
    (&[5, 4, 2, 2, 2, 2], "-24691976897396736", "-33321125005612416"),
    (&[5, 3, 3, 3, 3], "-3235804304358912", "-4580559535500672"),
    (&[5, 3, 3, 2, 2, 2], "-9713731756621824", "-13417639482731904"),
    (&[5, 2, 2, 2, 2, 2, 2], "-29167396545626112", "-39307625506351872"),
    (&[4, 4, 4, 3, 2], "-12758888683201728", "-17424186820264368"),
    (&[4, 4, 3, 3, 3], "-5019681599497920", "-7016824292191920"),
    (&[4, 4, 3, 2, 2, 2], "-15070492635303936", "-20554809649453296"),
    (&[4, 3, 3, 3, 2, 2], "-5928734983747584", "-8277654181388544"),
    (&[4, 3, 2, 2, 2, 2, 2], "-17801848444551168", "-24247859797369728"),
    (&[3, 3, 3, 3, 3, 2], "-2332510279839744", "-3333926642649984"),
    (&[3, 3, 3, 2, 2, 2, 2], "-7002794034462720", "-9765015249070080"),
    (&[3, 2, 2, 2, 2, 2, 2, 2], "-21029331652313088", "-28604369215531008"),
];

/// Terms of the genus-in-Chern-numbers formula as printed: basis index
/// (1-based), monomial parts, coefficient inside the bracket multiplying
/// `v_k`. Use [`genus_formula_signed`] for the actual coefficients.
pub const GENUS_FORMULA: [(usize, &[u32], &str); 210] = [
    (1, &[17], "1/71663616"),
    (2, &[14, 3], "1/119439360"),
    (2, &[15, 2], "1/119439360"),
    (2, &[17], "-1/19906560"),
    (3, &[12, 3, 2], "1/250822656"),
    (3, &[13, 2, 2], "1/250822656"),
    (3, &[12, 5], "1/250822656"),
    (3, &[13, 4], "-1/125411328"),
    (3, &[14, 3], "1/125411328"),
    (3, &[15, 2], "-1/250822656"),
    (3, &[17], "5/250822656"),
    (4, &[10, 3, 2, 2], "1/597196800"),
    (4, &[11, 2, 2, 2], "1/597196800"),
    (4, &[10, 4, 3], "1/597196800"),
    (4, &[10, 5, 2], "1/597196800"),
    (4, &[11, 4, 2], "-1/199065600"),
    (4, &[12, 3, 2], "1/298598400"),
    (4, &[13, 2, 2], "-1/597196800"),
    (4, &[10, 7], "-1/597196800"),
    (4, &[11, 6], "1/199065600"),
    (4, &[12, 5], "-1/119439360"),
    (4, &[13, 4], "1/119439360"),
    (4, &[14, 3], "1/66355200"),
    (4, &[15, 2], "-11/597196800"),
    (4, &[17], "13/298598400"),
    (5, &[8, 3, 2, 2, 2], "1/1532805120"),
    (5, &[9, 2, 2, 2, 2], "1/1532805120"),
    (5, &[8, 3, 3, 3], "1/4598415360"),
    (5, &[8, 4, 3, 2], "1/766402560"),
    (5, &[8, 5, 2, 2], "1/1532805120"),
    (5, &[9, 3, 3, 2], "-1/4598415360"),
    (5, &[9, 4, 2, 2], "-1/383201280"),
    (5, &[10, 3, 2, 2], "1/766402560"),
    (5, &[11, 2, 2, 2], "-1/1532805120"),
    (5, &[8, 5, 4], "-1/1532805120"),
    (5, &[8, 6, 3], "-1/1532805120"),
    (5, &[8, 7, 2], "-1/1532805120"),
    (5, &[9, 4, 4], "1/766402560"),
    (5, &[9, 5, 3], "1/4598415360"),
    (5, &[9, 6, 2], "1/383201280"),
    (5, &[10, 4, 3], "-1/766402560"),
    (5, &[10, 5, 2], "-17/4598415360"),
    (5, &[11, 3, 3], "-1/4598415360"),
    (5, &[11, 4, 2], "1/229920768"),
    (5, &[12, 3, 2], "1/191600640"),
    (5, &[13, 2, 2], "-1/153280512"),
    (5, &[9, 8], "-1/510935040"),
    (5, &[10, 7], "1/164229120"),
    (5, &[11, 6], "-1/109486080"),
    (5, &[12, 5], "1/510935040"),
    (5, &[13, 4], "19/2299207680"),
    (5, &[14, 3], "-29/1532805120"),
    (5, &[15, 2], "1/72990720"),
    (5, &[17], "-41/1532805120"),
    (6, &[6, 3, 2, 2, 2, 2], "1/11412430848"),
    (6, &[7, 2, 2, 2, 2, 2], "1/11412430848"),
    (6, &[6, 3, 3, 3, 2], "1/11412430848"),
    (6, &[6, 4, 3, 2, 2], "1/3804143616"),
    (6, &[6, 5, 2, 2, 2], "1/11412430848"),
    (6, &[7, 3, 3, 2, 2], "-1/11412430848"),
    (6, &[7, 4, 2, 2, 2], "-5/11412430848"),
    (6, &[8, 3, 2, 2, 2], "1/5706215424"),
    (6, &[9, 2, 2, 2, 2], "-1/11412430848"),
    (6, &[6, 4, 4, 3], "-1/11412430848"),
    (6, &[6, 5, 3, 3], "-1/11412430848"),
    (6, &[6, 5, 4, 2], "-1/5706215424"),
    (6, &[6, 6, 3, 2], "-1/5706215424"),
    (6, &[7, 4, 3, 3], "5/11412430848"),
    (6, &[7, 4, 4, 2], "5/11412430848"),
    (6, &[7, 5, 3, 2], "-1/3804143616"),
    (6, &[7, 6, 2, 2], "1/2853107712"),
    (6, &[8, 3, 3, 3], "-5/11412430848"),
    (6, &[8, 4, 3, 2], "-1/2853107712"),
    (6, &[8, 5, 2, 2], "-1/5706215424"),
    (6, &[9, 3, 3, 2], "1/2853107712"),
    (6, &[9, 4, 2, 2], "1/2853107712"),
    (6, &[10, 3, 2, 2], "-1/3804143616"),
    (6, &[11, 2, 2, 2], "1/11412430848"),
    (6, &[6, 6, 5], "1/11412430848"),
    (6, &[7, 5, 5], "1/2853107712"),
    (6, &[7, 6, 4], "-1/2853107712"),
    (6, &[7, 7, 3], "-5/11412430848"),
    (6, &[8, 5, 4], "-11/11412430848"),
    (6, &[8, 6, 3], "1/713276928"),
    (6, &[8, 7, 2], "5/5706215424"),
    (6, &[9, 4, 4], "11/11412430848"),
    (6, &[9, 5, 3], "-1/2853107712"),
    (6, &[9, 6, 2], "-29/11412430848"),
    (6, &[10, 4, 3], "-5/5706215424"),
    (6, &[10, 5, 2], "29/11412430848"),
    (6, &[11, 3, 3], "5/11412430848"),
    (6, &[11, 4, 2], "-1/713276928"),
    (6, &[12, 3, 2], "-11/5706215424"),
    (6, &[13, 2, 2], "25/11412430848"),
    (6, &[9, 8], "5/3804143616"),
    (6, &[10, 7], "-37/11412430848"),
    (6, &[11, 6], "41/11412430848"),
    (6, &[12, 5], "-1/2853107712"),
    (6, &[13, 4], "-37/11412430848"),
    (6, &[14, 3], "47/11412430848"),
    (6, &[15, 2], "-25/11412430848"),
    (6, &[17], "37/11412430848"),
    (7, &[6, 3, 2, 2, 2, 2], "1/6469632000"),
    (7, &[7, 2, 2, 2, 2, 2], "1/6469632000"),
    (7, &[6, 3, 3, 3, 2], "1/6469632000"),
    (7, &[6, 4, 3, 2, 2], "1/2156544000"),
    (7, &[6, 5, 2, 2, 2], "1/6469632000"),
    (7, &[7, 3, 3, 2, 2], "-1/6469632000"),
    (7, &[7, 4, 2, 2, 2], "-1/1293926400"),
    (7, &[8, 3, 2, 2, 2], "1/3234816000"),
    (7, &[9, 2, 2, 2, 2], "-1/6469632000"),
    (7, &[6, 4, 4, 3], "-1/6469632000"),
    (7, &[6, 5, 3, 3], "-1/6469632000"),
    (7, &[6, 5, 4, 2], "-1/3234816000"),
    (7, &[6, 6, 3, 2], "-1/3234816000"),
    (7, &[7, 4, 3, 3], "-1/4313088000"),
    (7, &[7, 4, 4, 2], "1/1293926400"),
    (7, &[7, 5, 3, 2], "7/12939264000"),
    (7, &[7, 6, 2, 2], "1/1617408000"),
    (7, &[8, 3, 3, 3], "1/4313088000"),
    (7, &[8, 4, 3, 2], "-1/1617408000"),
    (7, &[8, 5, 2, 2], "-17/12939264000"),
    (7, &[9, 3, 3, 2], "-1/2587852800"),
    (7, &[9, 4, 2, 2], "7/4313088000"),
    (7, &[10, 3, 2, 2], "1/646963200"),
    (7, &[11, 2, 2, 2], "-1/539136000"),
    (7, &[6, 6, 5], "1/6469632000"),
    (7, &[7, 5, 5], "-1/2587852800"),
    (7, &[7, 6, 4], "-1/1617408000"),
    (7, &[7, 7, 3], "1/4313088000"),
    (7, &[8, 5, 4], "1/431308800"),
    (7, &[8, 6, 3], "-7/12939264000"),
    (7, &[8, 7, 2], "7/12939264000"),
    (7, &[9, 4, 4], "-1/431308800"),
    (7, &[9, 5, 3], "1/2587852800"),
    (7, &[9, 6, 2], "-19/12939264000"),
    (7, &[10, 4, 3], "-7/12939264000"),
    (7, &[10, 5, 2], "-7/12939264000"),
    (7, &[11, 3, 3], "-1/4313088000"),
    (7, &[11, 4, 2], "59/12939264000"),
    (7, &[12, 3, 2], "-11/3234816000"),
    (7, &[13, 2, 2], "1/539136000"),
    (7, &[9, 8], "1/431308800"),
    (7, &[10, 7], "-1/269568000"),
    (7, &[11, 6], "1/3234816000"),
    (7, &[12, 5], "7/1293926400"),
    (7, &[13, 4], "-1/129392640"),
    (7, &[14, 3], "-23/12939264000"),
    (7, &[15, 2], "67/12939264000"),
    (7, &[17], "-41/6469632000"),
    (8, &[4, 3, 2, 2, 2, 2, 2], "1/11496038400"),
    (8, &[5, 2, 2, 2, 2, 2, 2], "1/11496038400"),
    (8, &[4, 3, 3, 3, 2, 2], "1/5748019200"),
    (8, &[4, 4, 3, 2, 2, 2], "1/2874009600"),
    (8, &[5, 3, 3, 2, 2, 2], "-1/5748019200"),
    (8, &[5, 4, 2, 2, 2, 2], "-1/2299207680"),
    (8, &[6, 3, 2, 2, 2, 2], "1/5748019200"),
    (8, &[7, 2, 2, 2, 2, 2], "-1/11496038400"),
    (8, &[4, 4, 3, 3, 3], "-1/11496038400"),
    (8, &[4, 4, 4, 3, 2], "-1/3832012800"),
    (8, &[5, 4, 3, 3, 2], "1/22992076800"),
    (8, &[5, 4, 4, 2, 2], "1/1916006400"),
    (8, &[5, 5, 3, 2, 2], "1/4598415360"),
    (8, &[6, 3, 3, 3, 2], "-1/4598415360"),
    (8, &[6, 4, 3, 2, 2], "-1/1277337600"),
    (8, &[6, 5, 2, 2, 2], "-1/22992076800"),
    (8, &[7, 3, 3, 2, 2], "1/22992076800"),
    (8, &[7, 4, 2, 2, 2], "17/22992076800"),
    (8, &[8, 3, 2, 2, 2], "1/7664025600"),
    (8, &[9, 2, 2, 2, 2], "-1/3284582400"),
    (8, &[5, 4, 4, 4], "-1/11496038400"),
    (8, &[5, 5, 4, 3], "-1/11496038400"),
    (8, &[5, 5, 5, 2], "-1/22992076800"),
    (8, &[6, 4, 4, 3], "1/2874009600"),
    (8, &[6, 5, 3, 3], "1/4598415360"),
    (8, &[6, 5, 4, 2], "1/5748019200"),
    (8, &[6, 6, 3, 2], "1/2299207680"),
    (8, &[7, 4, 3, 3], "-1/11496038400"),
    (8, &[7, 4, 4, 2], "-1/1045094400"),
    (8, &[7, 5, 3, 2], "-1/4598415360"),
    (8, &[7, 6, 2, 2], "-17/22992076800"),
    (8, &[8, 4, 3, 2], "-1/5748019200"),
    (8, &[8, 5, 2, 2], "1/1437004800"),
    (8, &[9, 3, 3, 2], "1/4598415360"),
    (8, &[9, 4, 2, 2], "1/2299207680"),
    (8, &[10, 3, 2, 2], "-1/1094860800"),
    (8, &[11, 2, 2, 2], "1/1277337600"),
    (8, &[6, 6, 5], "-1/4598415360"),
    (8, &[7, 5, 5], "1/22992076800"),
    (8, &[7, 6, 4], "1/1149603840"),
    (8, &[7, 7, 3], "1/5748019200"),
    (8, &[8, 5, 4], "-1/1642291200"),
    (8, &[8, 6, 3], "-1/4598415360"),
    (8, &[8, 7, 2], "-1/1149603840"),
    (8, &[9, 4, 4], "1/11496038400"),
    (8, &[9, 5, 3], "-1/4598415360"),
    (8, &[9, 6, 2], "17/11496038400"),
    (8, &[10, 4, 3], "23/22992076800"),
    (8, &[10, 5, 2], "1/11496038400"),
    (8, &[11, 4, 2], "-29/11496038400"),
    (8, &[12, 3, 2], "17/22992076800"),
    (8, &[13, 2, 2], "1/5748019200"),
    (8, &[9, 8], "-13/7664025600"),
    (8, &[10, 7], "59/22992076800"),
    (8, &[11, 6], "1/4598415360"),
    (8, &[12, 5], "-61/22992076800"),
    (8, &[13, 4], "53/22992076800"),
    (8, &[14, 3], "1/522547200"),
    (8, &[15, 2], "-61/22992076800"),
    (8, &[17], "61/22992076800"),
];

/// Genus of either 17-fold in the weight-0 basis `v_1..v_8`.
pub const GENUS_VECTOR: [&str; 8] = [
    "-523623513480701/2985984",
    "193611909253757/331776",
    "-348708636989665/1492992",
    "-442170341015857/995328",
    "22462744370909/82944",
    "-5975835708317/186624",
    "17023636880707/331776",
    "-10255680346099/497664",
];

/// Degrees of the ample generators, as `(prime, exponent)` lists.
pub const LINE_DEGREE_FACTORS: [&[(u64, u32)]; 2] = [
    &[(2, 13), (3, 2), (5, 18), (13, 1), (17, 1), (3413, 1)],
    &[(2, 7), (3, 2), (5, 1), (7, 18), (13, 3), (17, 1)],
];

/// Euler number shared by both 17-folds.
pub const EULER_NUMBER: &str = "-12566964323536824";

/// The printed formula's terms with their signs resolved.
///
/// Each bracket for `k >= 2` is printed with a minus sign in front of it. That
/// sign belongs to the leading entry of the bracket only: read this way the
/// table contracts against [`CHERN_NUMBERS`] to [`GENUS_VECTOR`] for both
/// varieties, whereas distributing it over the whole bracket does not.
pub fn genus_formula_signed() -> Vec<(usize, &'static [u32], Rational)> {
    let mut seen = [false; 9];
    GENUS_FORMULA
        .iter()
        .map(|&(k, parts, c)| {
            let mut v = parse_rational(c).expect("table entry");
            if k >= 2 && !seen[k] {
                v = -v;
            }
            seen[k] = true;
            (k, parts, v)
        })
        .collect()
}
