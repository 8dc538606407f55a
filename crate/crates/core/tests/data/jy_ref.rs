pub const JY_REF: &[(f64, f64, f64, f64)] = &[
    (0.0, 0.1, 0.99750156206604003228, -1.5342386513503668441),
    (0.0, 1.0, 0.76519768655796655145, 0.088256964215676957983),
    (0.0, 10.0, -0.2459357644513483352, 0.055671167283599391424),
    (0.0, 100.0, 0.019985850304223122424, -0.077244313365083152254),
    (0.0, 1000.0, 0.024786686152420174561, 0.0047159179776228133998),
    (0.0, 10000.0, -0.0070961603533888014773, 0.0036478055589866058867),
    (0.0, 1e-5, 0.999999999975, -7.4031602837019701326),
    (0.0, 2.0, 0.22389077914123566805, 0.5103756726497451196),
    (0.0, 333.0, 0.030631741385032203853, -0.031200406293729800842),
    (0.0, 2100.0, 0.01406211615848171375, 0.010266895982165710231),
    (0.3, 0.1, 0.4527257459945965856, -2.0018779347994434427),
    (0.3, 1.0, 0.74022247928102045053, -0.24570419535649945302),
    (0.3, 10.0, -0.19461921545691323505, 0.16042192864791389354),
    (0.3, 100.0, -0.017225645932780617964, -0.0779065075878701164),
    (0.3, 1000.0, 0.024226398849887748739, -0.0070499163260452690519),
    (0.3, 10000.0, -0.0046666852270175456702, 0.0064717869385328772251),
    (0.3, 1e-5, 0.028620072142050111649, -37.052241917585760257),
    (0.3, 2.0, 0.42569406198141372823, 0.36348280782609223376),
    (0.3, 333.0, 0.013134031878317124801, -0.041704519126806440767),
    (0.3, 2100.0, 0.017190451338211079533, 0.0027641725425937302363),
    (1.0, 0.1, 0.049937526036241997556, -6.4589510947020269877),
    (1.0, 1.0, 0.44005058574493351596, -0.78121282130028871655),
    (1.0, 10.0, 0.04347274616886143667, 0.24901542420695388392),
    (1.0, 100.0, -0.077145352014112158033, -0.020372312002759793305),
    (1.0, 1000.0, 0.0047283119070895239176, -0.024784331292351778915),
    (1.0, 10000.0, 0.0036474507555295803441, 0.007096342752536495135),
    (1.0, 1e-5, 4.9999999999375e-6, -63661.977275365485157),
    (1.0, 2.0, 0.5767248077568733872, -0.10703243154093754689),
    (1.0, 333.0, -0.031154447962004306319, -0.030678623265562356085),
    (1.0, 2100.0, 0.010270244395882471854, -0.014059672058162835594),
    (2.7, 0.1, 0.000073573533983611230713, -1603.6538527681420322),
    (2.7, 1.0, 0.034471210173999080891, -3.7515938969916572329),
    (2.7, 10.0, 0.14785146777645409112, -0.21006721249165609422),
    (2.7, 100.0, 0.057795740552927738004, 0.055028100515531116019),
    (2.7, 1000.0, -0.01552745550178307098, 0.019887688124007710609),
    (2.7, 10000.0, -0.00002572089508956454182, -0.0079788042909458312745),
    (2.7, 1e-5, 1.1668501341507869907e-15, -101034868993847.4895),
    (2.7, 2.0, 0.18147322125443907214, -0.93030339965121457102),
    (2.7, 333.0, 0.013438848855257393205, 0.041608041505519170474),
    (2.7, 2100.0, -0.01554557869849764958, 0.0078413963971282942087),
    (10.0, 0.1, 2.6905328954342155795e-20, -1183133513204519788.5),
    (10.0, 1.0, 2.630615123687453207e-10, -121618014.27868918929),
    (10.0, 10.0, 0.2074861066333588577, -0.35981415218340272205),
    (10.0, 100.0, -0.054732176935472014742, 0.058331574236414928754),
    (10.0, 1000.0, -0.024520622306036558192, -0.0059490005741626685808),
    (10.0, 10000.0, 0.0071143123833542745032, -0.0036122802078804159753),
    (10.0, 1e-5, 2.6911444554612558966e-60, -1.1828049049466349082e+58),
    (10.0, 2.0, 2.5153862827167367096e-7, -129184.54220803928264),
    (10.0, 333.0, -0.034962416852456694204, 0.026272817321911263748),
    (10.0, 2100.0, -0.013813781541559850805, -0.010598827323949234343),
    (50.5, 0.1, 9.1657626397585123974e-132, -6.8768728512841994419e+128),
    (50.5, 1.0, 2.8845718801460420761e-81, -2.185559232976411141e+78),
    (50.5, 10.0, 5.6283416829240059431e-31, -1.1425317497968101697e+28),
    (50.5, 100.0, 0.0046254492067682604727, 0.085755220129435797805),
    (50.5, 1000.0, -0.019663265177083255526, -0.015836319635217713172),
    (50.5, 10000.0, 0.0033846884499085623576, -0.0072254185373260700195),
    (50.5, 2.0, 4.5265779848575224396e-66, -1.3935730329296253868e+63),
    (50.5, 333.0, 0.027850972563611866288, -0.034036188644582505438),
    (50.5, 2100.0, -0.015661337009645814709, -0.0076133093783001416548),
    (330.0, 100.0, 7.7725555856459704185e-133, -1.3022320954620480181e+129),
    (330.0, 1000.0, -0.0044247248103533140541, 0.025589462942477690819),
    (330.0, 10000.0, 0.0020384823100749653274, -0.0077162982907700845806),
    (330.0, 333.0, 0.08822107216617158397, -0.064997820000163232258),
    (330.0, 2100.0, -0.0015845466250705188857, -0.017448646273411448346),
    (1999.5, 1990.0, 0.014332914732850612936, -0.11647311910165935319),
    (1999.5, 2100.0, 0.013151244598832246701, 0.028612987897373689058),
    (1999.5, 10000.0, -0.0079344089497256340908, 0.0014209895225567450413),
];
