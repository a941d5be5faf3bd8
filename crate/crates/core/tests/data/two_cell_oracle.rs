// Generated by scripts/oracles/two_cell.py; do not edit.

pub const OHMIC_RESIDUAL: [f64; 8] = [1.145301557555346267015686, -2.154761401624877887986677e-1, 4.970616018126867120647800e-1, 3.004961636726935091185382e-1, 3.317099312519407358344357e-1, -1.682554942209516164468911e-1, -7.240997159441332361372393e-1, -6.909505174574032205360605e-1];
pub const OHMIC_JACOBIAN: [[f64; 8]; 8] = [
    [1.095871166417557900346591e+1, 0.0, 0.0, -1.796299203732808867340425, -2.796099529932762159154182, 0.0, 0.0, -2.580379568814945528876464e-1],
    [0.0, 1.018555073435890779308069, 0.0, -2.423277315980807532734590e-1, 0.0, -2.591191045088772862472477e-1, 0.0, 3.373334588648409032056631e-2],
    [0.0, 0.0, 3.728230743534333965687833, -2.123685062113302055446483, 0.0, 0.0, -1.438488441882512643573774, -1.660572395385192666675763e-1],
    [-2.692448225436585764907181e-1, -1.009218880566762801191541e-2, -2.490259750136174739734155e-1, 3.903362986362943678476049, 0.0, 0.0, 0.0, -1.125000000000000000000000],
    [-3.334589175020079312135618, 0.0, 0.0, 2.804516882058226000937899e-1, 1.201041604967082993584691e+1, 0.0, 0.0, -2.056225287133725812198127],
    [0.0, -1.942603749535092235540911e-1, 0.0, -3.112538366888397237259031e-2, 0.0, 9.763015719761096925393575e-1, 0.0, -2.726206985434428990050930e-1],
    [0.0, 0.0, -1.736022943425394173900509, 1.314772620043622636591589e-1, 0.0, 0.0, 3.219603218323046988872417, -1.615057536902015078631067],
    [0.0, 0.0, 0.0, -1.125000000000000000000000, -2.692448225436585764907181e-1, -1.064361665972086184587608e-2, -2.226393470550667931623304e-1, 3.877527786258446231498925],
];

pub const SCHOTTKY_RESIDUAL: [f64; 8] = [-3.909371694219580389070742e-1, -1.304739413543242229466431e-1, 4.970616018126867120647800e-1, 3.004961636726935091185382e-1, 6.682949596101446349709716e-1, 3.873387685399605964384452e-2, -7.240997159441332361372393e-1, -6.909505174574032205360605e-1];
pub const SCHOTTKY_JACOBIAN: [[f64; 8]; 8] = [
    [6.571612903825243877071980, 0.0, 0.0, -2.409339202859135680483654, -2.796099529932762159154182, 0.0, 0.0, -2.580379568814945528876464e-1],
    [0.0, 6.036714847892196498165610e-1, 0.0, -2.903612951470082704006044e-1, 0.0, -2.591191045088772862472477e-1, 0.0, 3.373334588648409032056631e-2],
    [0.0, 0.0, 3.728230743534333965687833, -2.123685062113302055446483, 0.0, 0.0, -1.438488441882512643573774, -1.660572395385192666675763e-1],
    [-2.692448225436585764907181e-1, -1.009218880566762801191541e-2, -2.490259750136174739734155e-1, 3.903362986362943678476049, 0.0, 0.0, 0.0, -1.125000000000000000000000],
    [-3.334589175020079312135618, 0.0, 0.0, 2.804516882058226000937899e-1, 6.499042318962310137237669, 0.0, 0.0, -1.903662502344910024732233],
    [0.0, -1.942603749535092235540911e-1, 0.0, -3.112538366888397237259031e-2, 0.0, 6.499074093241067441250118e-1, 0.0, -3.725159962663061527143981e-1],
    [0.0, 0.0, -1.736022943425394173900509, 1.314772620043622636591589e-1, 0.0, 0.0, 3.219603218323046988872417, -1.615057536902015078631067],
    [0.0, 0.0, 0.0, -1.125000000000000000000000, -2.692448225436585764907181e-1, -1.064361665972086184587608e-2, -2.226393470550667931623304e-1, 3.877527786258446231498925],
];
pub const SCHOTTKY_TRACE_DENSITY: [[f64; 2]; 2] = [[1.278670608552724263285326, 2.397251769300578039264861e-1], [2.033043911584738317180573, 1.327937710466753888472505e-1]];
