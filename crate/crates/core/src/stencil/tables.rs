// @generated by `cfweno derive-coefficients --format rust`; do not edit by hand.

use super::{FrozenFamily, FrozenKernel, FrozenRatFn, FrozenSquare, Layout};

pub static KERNELS: [FrozenKernel; 6] = [
    FrozenKernel {
        layout: Layout::Compact,
        r: 2,
        interval_average: FrozenFamily {
            subs: &[
                &[&[(-1, 1), (1, 1)], &[(2, 1), (-1, 1)]],
                &[&[(0, 1), (1, 1)], &[(1, 1), (-1, 1)]],
            ],
            big: &[&[(0, 1), (-1, 1), (1, 1)], &[(0, 1), (3, 1), (-2, 1)], &[(1, 1), (-2, 1), (1, 1)]],
            weights: &[
                FrozenRatFn { num: &[(0, 1), (1, 1)], den: &[(1, 1)] },
                FrozenRatFn { num: &[(1, 1), (-1, 1)], den: &[(1, 1)] },
            ],
            poles: &[],
        },
        foot_value: FrozenFamily {
            subs: &[
                &[&[(-1, 1), (2, 1)], &[(2, 1), (-2, 1)]],
                &[&[(0, 1), (2, 1)], &[(1, 1), (-2, 1)]],
            ],
            big: &[&[(0, 1), (-2, 1), (3, 1)], &[(0, 1), (6, 1), (-6, 1)], &[(1, 1), (-4, 1), (3, 1)]],
            weights: &[
                FrozenRatFn { num: &[(0, 1), (-1, 1), (3, 2)], den: &[(-1, 2), (1, 1)] },
                FrozenRatFn { num: &[(-1, 2), (2, 1), (-3, 2)], den: &[(-1, 2), (1, 1)] },
            ],
            poles: &[0.5],
        },
        smoothness: &[
            &[FrozenSquare { weight: (1, 1), form: &[(-2, 1), (2, 1)] }],
            &[FrozenSquare { weight: (1, 1), form: &[(-2, 1), (2, 1)] }],
        ],
    },
    FrozenKernel {
        layout: Layout::Compact,
        r: 3,
        interval_average: FrozenFamily {
            subs: &[
                &[&[(1, 2), (-1, 1), (1, 2)], &[(-2, 1), (3, 1), (-1, 1)], &[(5, 2), (-2, 1), (1, 2)]],
                &[&[(0, 1), (-1, 1), (1, 1)], &[(0, 1), (3, 1), (-2, 1)], &[(1, 1), (-2, 1), (1, 1)]],
                &[&[(0, 1), (1, 2), (1, 2)], &[(1, 1), (0, 1), (-1, 1)], &[(0, 1), (-1, 2), (1, 2)]],
            ],
            big: &[&[(0, 1), (1, 12), (-1, 12), (-1, 12), (1, 12)], &[(0, 1), (-1, 1), (1, 2), (1, 1), (-1, 2)], &[(0, 1), (31, 12), (-1, 3), (-25, 12), (5, 6)], &[(1, 1), (-3, 2), (-1, 2), (3, 2), (-1, 2)], &[(0, 1), (-1, 6), (5, 12), (-1, 3), (1, 12)]],
            weights: &[
                FrozenRatFn { num: &[(0, 1), (1, 6), (1, 6)], den: &[(1, 1)] },
                FrozenRatFn { num: &[(2, 3), (1, 3), (-1, 3)], den: &[(1, 1)] },
                FrozenRatFn { num: &[(1, 3), (-1, 2), (1, 6)], den: &[(1, 1)] },
            ],
            poles: &[],
        },
        foot_value: FrozenFamily {
            subs: &[
                &[&[(1, 2), (-2, 1), (3, 2)], &[(-2, 1), (6, 1), (-3, 1)], &[(5, 2), (-4, 1), (3, 2)]],
                &[&[(0, 1), (-2, 1), (3, 1)], &[(0, 1), (6, 1), (-6, 1)], &[(1, 1), (-4, 1), (3, 1)]],
                &[&[(0, 1), (1, 1), (3, 2)], &[(1, 1), (0, 1), (-3, 1)], &[(0, 1), (-1, 1), (3, 2)]],
            ],
            big: &[&[(0, 1), (1, 6), (-1, 4), (-1, 3), (5, 12)], &[(0, 1), (-2, 1), (3, 2), (4, 1), (-5, 2)], &[(0, 1), (31, 6), (-1, 1), (-25, 3), (25, 6)], &[(1, 1), (-3, 1), (-3, 2), (6, 1), (-5, 2)], &[(0, 1), (-1, 3), (5, 4), (-4, 3), (5, 12)]],
            weights: &[
                FrozenRatFn { num: &[(0, 1), (-1, 9), (1, 18), (5, 18)], den: &[(-1, 3), (1, 1)] },
                FrozenRatFn { num: &[(4, 27), (-31, 54), (1, 54), (10, 9), (-5, 9)], den: &[(2, 9), (-1, 1), (1, 1)] },
                FrozenRatFn { num: &[(-2, 9), (5, 6), (-8, 9), (5, 18)], den: &[(-2, 3), (1, 1)] },
            ],
            poles: &[0.33333333333333326, 0.6666666666666666],
        },
        smoothness: &[
            &[FrozenSquare { weight: (1, 1), form: &[(1, 2), (-3, 1), (5, 2)] }, FrozenSquare { weight: (13, 12), form: &[(3, 1), (-6, 1), (3, 1)] }],
            &[FrozenSquare { weight: (1, 1), form: &[(-1, 1), (0, 1), (1, 1)] }, FrozenSquare { weight: (13, 12), form: &[(6, 1), (-12, 1), (6, 1)] }],
            &[FrozenSquare { weight: (1, 1), form: &[(-5, 2), (3, 1), (-1, 2)] }, FrozenSquare { weight: (13, 12), form: &[(3, 1), (-6, 1), (3, 1)] }],
        ],
    },
    FrozenKernel {
        layout: Layout::Compact,
        r: 4,
        interval_average: FrozenFamily {
            subs: &[
                &[&[(-1, 1), (5, 2), (-2, 1), (1, 2)], &[(3, 1), (-29, 4), (11, 2), (-5, 4)], &[(-4, 1), (8, 1), (-5, 1), (1, 1)], &[(3, 1), (-13, 4), (3, 2), (-1, 4)]],
                &[&[(0, 1), (1, 4), (-1, 2), (1, 4)], &[(0, 1), (-2, 1), (3, 1), (-1, 1)], &[(0, 1), (17, 4), (-9, 2), (5, 4)], &[(1, 1), (-5, 2), (2, 1), (-1, 2)]],
                &[&[(0, 1), (-1, 2), (0, 1), (1, 2)], &[(0, 1), (7, 4), (1, 2), (-5, 4)], &[(1, 1), (-1, 1), (-1, 1), (1, 1)], &[(0, 1), (-1, 4), (1, 2), (-1, 4)]],
                &[&[(0, 1), (1, 4), (1, 2), (1, 4)], &[(1, 1), (1, 1), (-1, 1), (-1, 1)], &[(0, 1), (-7, 4), (1, 2), (5, 4)], &[(0, 1), (1, 2), (0, 1), (-1, 2)]],
            ],
            big: &[&[(0, 1), (-1, 18), (1, 36), (1, 9), (-1, 18), (-1, 18), (1, 36)], &[(0, 1), (25, 108), (-11, 108), (-25, 54), (11, 54), (25, 108), (-11, 108)], &[(0, 1), (-1, 1), (0, 1), (7, 4), (-1, 4), (-3, 4), (1, 4)], &[(0, 1), (241, 108), (97, 108), (-80, 27), (-5, 108), (133, 108), (-19, 54)], &[(1, 1), (-1, 1), (-7, 4), (2, 1), (1, 2), (-1, 1), (1, 4)], &[(0, 1), (-14, 27), (31, 27), (-25, 54), (-59, 108), (13, 27), (-11, 108)], &[(0, 1), (1, 9), (-2, 9), (1, 36), (7, 36), (-5, 36), (1, 36)]],
            weights: &[
                FrozenRatFn { num: &[(0, 1), (1, 18), (1, 9), (1, 18)], den: &[(1, 1)] },
                FrozenRatFn { num: &[(7, 27), (7, 18), (0, 1), (-7, 54)], den: &[(1, 1)] },
                FrozenRatFn { num: &[(14, 27), (0, 1), (-7, 18), (7, 54)], den: &[(1, 1)] },
                FrozenRatFn { num: &[(2, 9), (-4, 9), (5, 18), (-1, 18)], den: &[(1, 1)] },
            ],
            poles: &[],
        },
        foot_value: FrozenFamily {
            subs: &[
                &[&[(-1, 1), (5, 1), (-6, 1), (2, 1)], &[(3, 1), (-29, 2), (33, 2), (-5, 1)], &[(-4, 1), (16, 1), (-15, 1), (4, 1)], &[(3, 1), (-13, 2), (9, 2), (-1, 1)]],
                &[&[(0, 1), (1, 2), (-3, 2), (1, 1)], &[(0, 1), (-4, 1), (9, 1), (-4, 1)], &[(0, 1), (17, 2), (-27, 2), (5, 1)], &[(1, 1), (-5, 1), (6, 1), (-2, 1)]],
                &[&[(0, 1), (-1, 1), (0, 1), (2, 1)], &[(0, 1), (7, 2), (3, 2), (-5, 1)], &[(1, 1), (-2, 1), (-3, 1), (4, 1)], &[(0, 1), (-1, 2), (3, 2), (-1, 1)]],
                &[&[(0, 1), (1, 2), (3, 2), (1, 1)], &[(1, 1), (2, 1), (-3, 1), (-4, 1)], &[(0, 1), (-7, 2), (3, 2), (5, 1)], &[(0, 1), (1, 1), (0, 1), (-2, 1)]],
            ],
            big: &[&[(0, 1), (-1, 9), (1, 12), (4, 9), (-5, 18), (-1, 3), (7, 36)], &[(0, 1), (25, 54), (-11, 36), (-50, 27), (55, 54), (25, 18), (-77, 108)], &[(0, 1), (-2, 1), (0, 1), (7, 1), (-5, 4), (-9, 2), (7, 4)], &[(0, 1), (241, 54), (97, 36), (-320, 27), (-25, 108), (133, 18), (-133, 54)], &[(1, 1), (-2, 1), (-21, 4), (8, 1), (5, 2), (-6, 1), (7, 4)], &[(0, 1), (-28, 27), (31, 9), (-50, 27), (-295, 108), (26, 9), (-77, 108)], &[(0, 1), (2, 9), (-2, 3), (1, 9), (35, 36), (-5, 6), (7, 36)]],
            weights: &[
                FrozenRatFn { num: &[(0, 1), (1, 18), (1, 72), (-5, 24), (-5, 72), (7, 72)], den: &[(1, 2), (-2, 1), (1, 1)] },
                FrozenRatFn { num: &[(-7, 108), (1, 4), (83, 432), (-137, 144), (5, 144), (275, 432), (-49, 216)], den: &[(-1, 4), (3, 2), (-5, 2), (1, 1)] },
                FrozenRatFn { num: &[(7, 54), (-7, 27), (-55, 108), (439, 432), (5, 27), (-313, 432), (49, 216)], den: &[(1, 4), (-1, 2), (-1, 2), (1, 1)] },
                FrozenRatFn { num: &[(-1, 9), (1, 3), (-1, 18), (-35, 72), (5, 12), (-7, 72)], den: &[(-1, 2), (0, 1), (1, 1)] },
            ],
            poles: &[0.2928932188134525, 0.5, 0.7071067811865475],
        },
        smoothness: &[
            &[FrozenSquare { weight: (1, 1), form: &[(-1, 1), (3, 1), (-5, 1), (3, 1)] }, FrozenSquare { weight: (13, 12), form: &[(-6, 1), (18, 1), (-18, 1), (6, 1)] }, FrozenSquare { weight: (781, 720), form: &[(-12, 1), (30, 1), (-24, 1), (6, 1)] }],
            &[FrozenSquare { weight: (1, 1), form: &[(0, 1), (-1, 1), (0, 1), (1, 1)] }, FrozenSquare { weight: (13, 12), form: &[(0, 1), (6, 1), (-12, 1), (6, 1)] }, FrozenSquare { weight: (781, 720), form: &[(-6, 1), (24, 1), (-30, 1), (12, 1)] }],
            &[FrozenSquare { weight: (1, 1), form: &[(-1, 1), (0, 1), (1, 1), (0, 1)] }, FrozenSquare { weight: (13, 12), form: &[(6, 1), (-12, 1), (6, 1), (0, 1)] }, FrozenSquare { weight: (781, 720), form: &[(-12, 1), (30, 1), (-24, 1), (6, 1)] }],
            &[FrozenSquare { weight: (1, 1), form: &[(-3, 1), (5, 1), (-3, 1), (1, 1)] }, FrozenSquare { weight: (13, 12), form: &[(6, 1), (-18, 1), (18, 1), (-6, 1)] }, FrozenSquare { weight: (781, 720), form: &[(-6, 1), (24, 1), (-30, 1), (12, 1)] }],
        ],
    },
    FrozenKernel {
        layout: Layout::NodeOnly,
        r: 2,
        interval_average: FrozenFamily {
            subs: &[
                &[&[(-1, 2), (1, 2)], &[(3, 2), (-1, 2)]],
                &[&[(1, 2), (1, 2)], &[(1, 2), (-1, 2)]],
            ],
            big: &[&[(-1, 6), (0, 1), (1, 6)], &[(5, 6), (1, 2), (-1, 3)], &[(1, 3), (-1, 2), (1, 6)]],
            weights: &[
                FrozenRatFn { num: &[(1, 3), (1, 3)], den: &[(1, 1)] },
                FrozenRatFn { num: &[(2, 3), (-1, 3)], den: &[(1, 1)] },
            ],
            poles: &[],
        },
        foot_value: FrozenFamily {
            subs: &[
                &[&[(-1, 2), (1, 1)], &[(3, 2), (-1, 1)]],
                &[&[(1, 2), (1, 1)], &[(1, 2), (-1, 1)]],
            ],
            big: &[&[(-1, 6), (0, 1), (1, 2)], &[(5, 6), (1, 1), (-1, 1)], &[(1, 3), (-1, 1), (1, 2)]],
            weights: &[
                FrozenRatFn { num: &[(-1, 6), (0, 1), (1, 2)], den: &[(-1, 2), (1, 1)] },
                FrozenRatFn { num: &[(-1, 3), (1, 1), (-1, 2)], den: &[(-1, 2), (1, 1)] },
            ],
            poles: &[0.5],
        },
        smoothness: &[
            &[FrozenSquare { weight: (1, 1), form: &[(-1, 1), (1, 1)] }],
            &[FrozenSquare { weight: (1, 1), form: &[(-1, 1), (1, 1)] }],
        ],
    },
    FrozenKernel {
        layout: Layout::NodeOnly,
        r: 3,
        interval_average: FrozenFamily {
            subs: &[
                &[&[(1, 3), (-1, 2), (1, 6)], &[(-7, 6), (3, 2), (-1, 3)], &[(11, 6), (-1, 1), (1, 6)]],
                &[&[(-1, 6), (0, 1), (1, 6)], &[(5, 6), (1, 2), (-1, 3)], &[(1, 3), (-1, 2), (1, 6)]],
                &[&[(1, 3), (1, 2), (1, 6)], &[(5, 6), (-1, 2), (-1, 3)], &[(-1, 6), (0, 1), (1, 6)]],
            ],
            big: &[&[(1, 30), (0, 1), (-1, 24), (0, 1), (1, 120)], &[(-13, 60), (-1, 24), (1, 4), (1, 24), (-1, 30)], &[(47, 60), (5, 8), (-1, 3), (-1, 8), (1, 20)], &[(9, 20), (-5, 8), (1, 12), (1, 8), (-1, 30)], &[(-1, 20), (1, 24), (1, 24), (-1, 24), (1, 120)]],
            weights: &[
                FrozenRatFn { num: &[(1, 10), (3, 20), (1, 20)], den: &[(1, 1)] },
                FrozenRatFn { num: &[(3, 5), (1, 10), (-1, 10)], den: &[(1, 1)] },
                FrozenRatFn { num: &[(3, 10), (-1, 4), (1, 20)], den: &[(1, 1)] },
            ],
            poles: &[],
        },
        foot_value: FrozenFamily {
            subs: &[
                &[&[(1, 3), (-1, 1), (1, 2)], &[(-7, 6), (3, 1), (-1, 1)], &[(11, 6), (-2, 1), (1, 2)]],
                &[&[(-1, 6), (0, 1), (1, 2)], &[(5, 6), (1, 1), (-1, 1)], &[(1, 3), (-1, 1), (1, 2)]],
                &[&[(1, 3), (1, 1), (1, 2)], &[(5, 6), (-1, 1), (-1, 1)], &[(-1, 6), (0, 1), (1, 2)]],
            ],
            big: &[&[(1, 30), (0, 1), (-1, 8), (0, 1), (1, 24)], &[(-13, 60), (-1, 12), (3, 4), (1, 6), (-1, 6)], &[(47, 60), (5, 4), (-1, 1), (-1, 2), (1, 4)], &[(9, 20), (-5, 4), (1, 4), (1, 2), (-1, 6)], &[(-1, 20), (1, 12), (1, 8), (-1, 6), (1, 24)]],
            weights: &[
                FrozenRatFn { num: &[(1, 15), (0, 1), (-1, 4), (0, 1), (1, 12)], den: &[(2, 3), (-2, 1), (1, 1)] },
                FrozenRatFn { num: &[(-2, 15), (16, 45), (9, 20), (-13, 9), (11, 36), (1, 2), (-1, 6)], den: &[(-2, 9), (2, 3), (1, 3), (-2, 1), (1, 1)] },
                FrozenRatFn { num: &[(-1, 10), (1, 6), (1, 4), (-1, 3), (1, 12)], den: &[(-1, 3), (0, 1), (1, 1)] },
            ],
            poles: &[0.4226497308103742, 0.5773502691896257],
        },
        smoothness: &[
            &[FrozenSquare { weight: (1, 1), form: &[(1, 2), (-2, 1), (3, 2)] }, FrozenSquare { weight: (13, 12), form: &[(1, 1), (-2, 1), (1, 1)] }],
            &[FrozenSquare { weight: (1, 1), form: &[(-1, 2), (0, 1), (1, 2)] }, FrozenSquare { weight: (13, 12), form: &[(1, 1), (-2, 1), (1, 1)] }],
            &[FrozenSquare { weight: (1, 1), form: &[(-3, 2), (2, 1), (-1, 2)] }, FrozenSquare { weight: (13, 12), form: &[(1, 1), (-2, 1), (1, 1)] }],
        ],
    },
    FrozenKernel {
        layout: Layout::NodeOnly,
        r: 4,
        interval_average: FrozenFamily {
            subs: &[
                &[&[(-1, 4), (11, 24), (-1, 4), (1, 24)], &[(13, 12), (-15, 8), (11, 12), (-1, 8)], &[(-23, 12), (23, 8), (-13, 12), (1, 8)], &[(25, 12), (-35, 24), (5, 12), (-1, 24)]],
                &[&[(1, 12), (-1, 24), (-1, 12), (1, 24)], &[(-5, 12), (1, 8), (5, 12), (-1, 8)], &[(13, 12), (3, 8), (-7, 12), (1, 8)], &[(1, 4), (-11, 24), (1, 4), (-1, 24)]],
                &[&[(-1, 12), (-1, 24), (1, 12), (1, 24)], &[(7, 12), (5, 8), (-1, 12), (-1, 8)], &[(7, 12), (-5, 8), (-1, 12), (1, 8)], &[(-1, 12), (1, 24), (1, 12), (-1, 24)]],
                &[&[(1, 4), (11, 24), (1, 4), (1, 24)], &[(13, 12), (-3, 8), (-7, 12), (-1, 8)], &[(-5, 12), (-1, 8), (5, 12), (1, 8)], &[(1, 12), (1, 24), (-1, 12), (-1, 24)]],
            ],
            big: &[&[(-1, 140), (0, 1), (7, 720), (0, 1), (-1, 360), (0, 1), (1, 5040)], &[(5, 84), (1, 180), (-19, 240), (-1, 144), (1, 48), (1, 720), (-1, 840)], &[(-101, 420), (-5, 72), (7, 24), (11, 144), (-13, 240), (-1, 144), (1, 336)], &[(319, 420), (49, 72), (-23, 72), (-7, 36), (23, 360), (1, 72), (-1, 252)], &[(107, 210), (-49, 72), (1, 48), (7, 36), (-1, 30), (-1, 72), (1, 336)], &[(-19, 210), (5, 72), (7, 80), (-11, 144), (1, 240), (1, 144), (-1, 840)], &[(1, 105), (-1, 180), (-1, 90), (1, 144), (1, 720), (-1, 720), (1, 5040)]],
            weights: &[
                FrozenRatFn { num: &[(1, 35), (11, 210), (1, 35), (1, 210)], den: &[(1, 1)] },
                FrozenRatFn { num: &[(12, 35), (1, 5), (-1, 70), (-1, 70)], den: &[(1, 1)] },
                FrozenRatFn { num: &[(18, 35), (-9, 70), (-2, 35), (1, 70)], den: &[(1, 1)] },
                FrozenRatFn { num: &[(4, 35), (-13, 105), (3, 70), (-1, 210)], den: &[(1, 1)] },
            ],
            poles: &[],
        },
        foot_value: FrozenFamily {
            subs: &[
                &[&[(-1, 4), (11, 12), (-3, 4), (1, 6)], &[(13, 12), (-15, 4), (11, 4), (-1, 2)], &[(-23, 12), (23, 4), (-13, 4), (1, 2)], &[(25, 12), (-35, 12), (5, 4), (-1, 6)]],
                &[&[(1, 12), (-1, 12), (-1, 4), (1, 6)], &[(-5, 12), (1, 4), (5, 4), (-1, 2)], &[(13, 12), (3, 4), (-7, 4), (1, 2)], &[(1, 4), (-11, 12), (3, 4), (-1, 6)]],
                &[&[(-1, 12), (-1, 12), (1, 4), (1, 6)], &[(7, 12), (5, 4), (-1, 4), (-1, 2)], &[(7, 12), (-5, 4), (-1, 4), (1, 2)], &[(-1, 12), (1, 12), (1, 4), (-1, 6)]],
                &[&[(1, 4), (11, 12), (3, 4), (1, 6)], &[(13, 12), (-3, 4), (-7, 4), (-1, 2)], &[(-5, 12), (-1, 4), (5, 4), (1, 2)], &[(1, 12), (1, 12), (-1, 4), (-1, 6)]],
            ],
            big: &[&[(-1, 140), (0, 1), (7, 240), (0, 1), (-1, 72), (0, 1), (1, 720)], &[(5, 84), (1, 90), (-19, 80), (-1, 36), (5, 48), (1, 120), (-1, 120)], &[(-101, 420), (-5, 36), (7, 8), (11, 36), (-13, 48), (-1, 24), (1, 48)], &[(319, 420), (49, 36), (-23, 24), (-7, 9), (23, 72), (1, 12), (-1, 36)], &[(107, 210), (-49, 36), (1, 16), (7, 9), (-1, 6), (-1, 12), (1, 48)], &[(-19, 210), (5, 36), (21, 80), (-11, 36), (1, 48), (1, 24), (-1, 120)], &[(1, 105), (-1, 90), (-1, 30), (1, 36), (1, 144), (-1, 120), (1, 720)]],
            weights: &[
                FrozenRatFn { num: &[(-3, 70), (0, 1), (7, 40), (0, 1), (-1, 12), (0, 1), (1, 120)], den: &[(-3, 2), (11, 2), (-9, 2), (1, 1)] },
                FrozenRatFn { num: &[(-9, 35), (9, 10), (7, 15), (-521, 140), (547, 240), (107, 80), (-157, 120), (1, 16), (11, 80), (-1, 40)], den: &[(-3, 4), (7, 2), (-11, 4), (-7, 1), (47, 4), (-6, 1), (1, 1)] },
                FrozenRatFn { num: &[(-9, 70), (9, 140), (1663, 1680), (-219, 560), (-479, 240), (13, 20), (211, 240), (-21, 80), (-7, 80), (1, 40)], den: &[(-1, 4), (0, 1), (7, 4), (0, 1), (-13, 4), (0, 1), (1, 1)] },
                FrozenRatFn { num: &[(-2, 35), (1, 15), (1, 5), (-1, 6), (-1, 24), (1, 20), (-1, 120)], den: &[(-1, 2), (-1, 2), (3, 2), (1, 1)] },
            ],
            poles: &[0.3819660112501051, 0.5, 0.6180339887498949],
        },
        smoothness: &[
            &[FrozenSquare { weight: (1, 1), form: &[(-1, 3), (3, 2), (-3, 1), (11, 6)] }, FrozenSquare { weight: (13, 12), form: &[(-1, 1), (4, 1), (-5, 1), (2, 1)] }, FrozenSquare { weight: (781, 720), form: &[(-1, 1), (3, 1), (-3, 1), (1, 1)] }],
            &[FrozenSquare { weight: (1, 1), form: &[(1, 6), (-1, 1), (1, 2), (1, 3)] }, FrozenSquare { weight: (13, 12), form: &[(0, 1), (1, 1), (-2, 1), (1, 1)] }, FrozenSquare { weight: (781, 720), form: &[(-1, 1), (3, 1), (-3, 1), (1, 1)] }],
            &[FrozenSquare { weight: (1, 1), form: &[(-1, 3), (-1, 2), (1, 1), (-1, 6)] }, FrozenSquare { weight: (13, 12), form: &[(1, 1), (-2, 1), (1, 1), (0, 1)] }, FrozenSquare { weight: (781, 720), form: &[(-1, 1), (3, 1), (-3, 1), (1, 1)] }],
            &[FrozenSquare { weight: (1, 1), form: &[(-11, 6), (3, 1), (-3, 2), (1, 3)] }, FrozenSquare { weight: (13, 12), form: &[(2, 1), (-5, 1), (4, 1), (-1, 1)] }, FrozenSquare { weight: (781, 720), form: &[(-1, 1), (3, 1), (-3, 1), (1, 1)] }],
        ],
    },
];
