// Generated by gen_reference.py (mpmath, 40 digits). Do not edit.

/// (nu, x, I, K, I', K')
pub const IK: &[(f64, f64, f64, f64, f64, f64)] = &[
    (
        0.0,
        0.001,
        1.000000250000015625000444,
        7.023688800562381322795477,
        5.000000625000026145750657e-4,
        -9.999962381560855534612038e+2,
    ),
    (
        0.0,
        0.1,
        1.002501562934095601678113,
        2.427069024702016557818679,
        5.00625260470926948997822e-2,
        -9.853844780870605574377339,
    ),
    (
        0.0,
        1.0,
        1.266065877752008335598245,
        4.210244382407083333356274e-1,
        5.65159103992485027207696e-1,
        -6.0190723019723457473754e-1,
    ),
    (
        0.0,
        2.0,
        2.279585302336067267437204,
        1.138938727495334356527196e-1,
        1.590636854637329063382254,
        -1.398658818165224272845988e-1,
    ),
    (
        0.0,
        5.0,
        2.723987182360444689454423e+1,
        3.691098334042594274735261e-3,
        2.433564214245052719914305e+1,
        -4.044613445452164208365022e-3,
    ),
    (
        0.0,
        10.0,
        2.815716628466254471469811e+3,
        1.778006231616765181130119e-5,
        2.670988303701254654341032e+3,
        -1.864877345382558459681686e-5,
    ),
    (
        0.0,
        30.0,
        7.816722978239774897173898e+11,
        2.132477496463056371166896e-14,
        7.685320389389569994942947e+11,
        -2.167732001891549424867038e-14,
    ),
    (
        0.0,
        60.0,
        5.894077055609801168278817e+24,
        1.413897840559107809095646e-27,
        5.844751588390468281335173e+24,
        -1.425632026517104323214389e-27,
    ),
    (
        0.5,
        0.001,
        2.523132942542268103973654e-2,
        3.959365951311664320058514e+1,
        1.261567312315392136865646e+1,
        -1.983642341607143783138885e+4,
    ),
    (
        0.5,
        0.1,
        2.527339846001319804979309e-1,
        3.586166838797260025083458,
        1.272088778186752602647437,
        -2.15170010327835591551395e+1,
    ),
    (
        0.5,
        1.0,
        9.376748882454876467172629e-1,
        4.610685044478945584395759e-1,
        7.623627704702236231472603e-1,
        -6.916027566718418376593638e-1,
    ),
    (
        0.5,
        2.0,
        2.046236863089055036605184,
        1.199377719680614473680365e-1,
        1.611032404405373434664824,
        -1.499222149600768092100456e-1,
    ),
    (
        0.5,
        5.0,
        2.64775474975590652053865e+1,
        3.776613374642882559527651e-3,
        2.383219701455004419994085e+1,
        -4.154274712107170815480416e-3,
    ),
    (
        0.5,
        10.0,
        2.7787846038745710239976e+3,
        1.799347809370517960811588e-5,
        2.639845385135846400913373e+3,
        -1.889315199839043858852167e-5,
    ),
    (
        0.5,
        30.0,
        7.783660688404464041935591e+11,
        2.141237565956011399298008e-14,
        7.653933010264389641236664e+11,
        -2.176924858721944922619641e-14,
    ),
    (
        0.5,
        60.0,
        5.881706576075187278311454e+24,
        1.416822350035369448355721e-27,
        5.832692354607894050992192e+24,
        -1.428629202952330860425352e-27,
    ),
    (
        1.0,
        0.001,
        5.000000625000026145750657e-4,
        9.999962381560855534612038e+2,
        5.000001875000130208337209e-1,
        -1.000003261844886095025923e+6,
    ),
    (
        1.0,
        0.1,
        5.00625260470926948997822e-2,
        9.853844780870605574377339,
        5.01876302463168680470576e-1,
        -1.009655168334080668316094e+2,
    ),
    (
        1.0,
        1.0,
        5.65159103992485027207696e-1,
        6.0190723019723457473754e-1,
        7.009067737595233083905486e-1,
        -1.022931668437942908073167,
    ),
    (
        1.0,
        2.0,
        1.590636854637329063382254,
        1.398658818165224272845988e-1,
        1.484266875017402735746077,
        -1.83826813657794649295019e-1,
    ),
    (
        1.0,
        5.0,
        2.433564214245052719914305e+1,
        4.044613445452164208365022e-3,
        2.237274339511434145471562e+1,
        -4.500021023133027116408265e-3,
    ),
    (
        1.0,
        10.0,
        2.670988303701254654341032e+3,
        1.864877345382558459681686e-5,
        2.548617798096129006035708e+3,
        -1.964493966155021027098288e-5,
    ),
    (
        1.0,
        30.0,
        7.685320389389569994942947e+11,
        2.167732001891549424867038e-14,
        7.5605456319267892306758e+11,
        -2.204735229859441351995797e-14,
    ),
    (
        1.0,
        60.0,
        5.844751588390468281335173e+24,
        1.425632026517104323214389e-27,
        5.796664529136626696923231e+24,
        -1.437658374334392881149219e-27,
    ),
    (
        2.5,
        0.001,
        1.68208846816261117242617e-9,
        1.188997991115487877002761e+8,
        4.205221410704876623925953e-6,
        -2.972495374121251356927011e+11,
    ),
    (
        2.5,
        0.1,
        1.683290173488853515117919e-4,
        1.187021223641892942887107e+3,
        4.210629752370636751362955e-3,
        -2.971497842627409178314001e+4,
    ),
    (
        2.5,
        1.0,
        5.709890920304824735137631e-2,
        3.227479531135261909077031,
        1.507780533398591814101881e-1,
        -8.99083583673394388957173,
    ),
    (
        2.5,
        2.0,
        3.970270801393905233348909e-1,
        3.897977588961997039461186e-1,
        6.031893384588715213449149e-1,
        -6.67153856572341800984703e-1,
    ),
    (
        2.5,
        5.0,
        1.376688213868258259774518e+1,
        6.49577500438575800238756e-3,
        1.430100119545284638052961e+1,
        -7.779823551764338072626962e-3,
    ),
    (
        2.5,
        10.0,
        2.028512757391935669083552e+3,
        2.393132586462788887879412e-5,
        1.993777965594133932442605e+3,
        -2.5775657369232669788626e-5,
    ),
    (
        2.5,
        30.0,
        7.031240155192032517881817e+11,
        2.362498781104799243892135e-14,
        6.93826865252497919738092e+11,
        -2.409487049913278382932286e-14,
    ),
    (
        2.5,
        60.0,
        5.592522669418157237127808e+24,
        1.48884415282883406198047e-27,
        5.550656355248177605459271e+24,
        -1.502471228903827025077502e-27,
    ),
    (
        3.5,
        0.001,
        2.402983487803992779973294e-13,
        5.944990351909970987556432e+11,
        8.410442474312137169432671e-10,
        -2.080746742068288913879299e+15,
    ),
    (
        3.5,
        0.1,
        2.404318648503197171596033e-6,
        5.939050901732141370799483e+4,
        8.417786465127345517725811e-5,
        -2.079854836829891257333463e+6,
    ),
    (
        3.5,
        1.0,
        8.030780332238563031747307e-3,
        1.705953466457209866226431e+1,
        2.899117804021327674026074e-2,
        -6.293585085713760722700211e+1,
    ),
    (
        3.5,
        2.0,
        1.069054882846333671763013e-1,
        1.154401055192591430917351,
        2.099424756412821307763636e-1,
        -2.409999605483234708051483,
    ),
    (
        3.5,
        5.0,
        7.417560126111555081657016,
        1.102771105395721707382074e-2,
        8.57459005040449404058527,
        -1.421517274215580995406208e-2,
    ),
    (
        3.5,
        10.0,
        1.486649776246150015171717e+3,
        3.175848883538964200832453e-5,
        1.508185335705783163773451e+3,
        -3.50467969570142635817077e-5,
    ),
    (
        3.5,
        30.0,
        6.352331972925643154224102e+11,
        2.606361948338678319923297e-14,
        6.290134758350707483222338e+11,
        -2.666574341744311714549853e-14,
    ),
    (
        3.5,
        60.0,
        5.317634577355754387245612e+24,
        1.564506401938361777660022e-27,
        5.282327319072404897871813e+24,
        -1.580107026275238499010638e-27,
    ),
    (
        5.0,
        0.001,
        2.604166775173613319785698e-19,
        3.839999760000009600319309e+17,
        1.302083409288196296726301e-15,
        -1.919999928000000760191874e+21,
    ),
    (
        5.0,
        0.1,
        2.605251929893697613108911e-9,
        3.837600999583591757004773e+7,
        1.302843056352809212095588e-7,
        -1.919280100041588340165875e+9,
    ),
    (
        5.0,
        1.0,
        2.714631559569718751810739e-4,
        3.609605896012407006555238e+2,
        1.379804441262006949232715e-3,
        -1.849035363853266347796312e+3,
    ),
    (
        5.0,
        2.0,
        9.825679323131702320807051e-3,
        9.431049100596467442819336,
        2.616437167135098243586921e-2,
        -2.577353867890312692946336e+1,
    ),
    (
        5.0,
        5.0,
        2.157974547322546466902428,
        3.270627371203185788343374e-2,
        2.950260216320323483304454,
        -4.796533952253243645131106e-2,
    ),
    (
        5.0,
        10.0,
        7.771882864032599599072935e+2,
        5.754184998531227927637402e-5,
        8.37896394557861617787724e+2,
        -6.663236215354812362230119e-5,
    ),
    (
        5.0,
        30.0,
        5.121514654769349699212449e+11,
        3.210333510589026247912135e-14,
        5.10850158622403271036511e+11,
        -3.306314761085795961325454e-14,
    ),
    (
        5.0,
        60.0,
        4.777765207256172122438942e+24,
        1.738223274188698796345097e-27,
        4.754624756570814068734667e+24,
        -1.758576842997844471574341e-27,
    ),
    (
        10.0,
        0.001,
        2.691144516629747319248679e-40,
        1.857945548390400419637377e+38,
        2.691144528862222315650175e-36,
        -1.85794555871232005840112e+42,
    ),
    (
        10.0,
        0.1,
        2.691756142922143022303789e-20,
        1.857429584630399968762184e+18,
        2.691878493156891719043317e-18,
        -1.857532771580159065702562e+20,
    ),
    (
        10.0,
        1.0,
        2.75294803983687362523571e-10,
        1.807132899010294546915979e+8,
        2.76543782292179853784927e-9,
        -1.817137939997965146189143e+9,
    ),
    (
        10.0,
        2.0,
        3.016963879350684365446404e-7,
        1.624824039795591487183479e+5,
        1.535703963035095765293217e-6,
        -8.302224961971677456737594e+5,
    ),
    (
        10.0,
        5.0,
        4.58004441917605126118647e-3,
        9.758562829177810131742367,
        1.015562997846245526530836e-2,
        -2.202940354963708820165266e+1,
    ),
    (
        10.0,
        10.0,
        2.18917061637233705259291e+1,
        1.614255300390670023457252e-3,
        3.042758633983967114028591e+1,
        -2.324264134201450805086263e-3,
    ),
    (
        10.0,
        30.0,
        1.458318099759671237651635e+11,
        1.084281694222297391103754e-13,
        1.515241449619909033105791e+11,
        -1.159133091375730377958055e-13,
    ),
    (
        10.0,
        60.0,
        2.548624607256677781289509e+24,
        3.225340870056314715142023e-27,
        2.563040757550891452243836e+24,
        -3.295890079614104854965266e-27,
    ),
    (
        19.5,
        0.001,
        7.888955908396165842183947e-83,
        3.250243239403980946814633e+80,
        1.538346404061387893524903e-78,
        -6.337974325622203895147914e+84,
    ),
    (
        19.5,
        0.1,
        7.889917935907611800626119e-44,
        3.249804092632290850238803e+41,
        1.538553241095114939435236e-41,
        -6.33720581249777845593002e+43,
    ),
    (
        19.5,
        1.0,
        2.525307663480851807039801e-24,
        1.014026462351383253321622e+22,
        4.930505740914142711426542e-23,
        -1.980090100801914118982138e+23,
    ),
    (
        19.5,
        2.0,
        1.942073095520081447899114e-18,
        1.31338385910177226145409e+16,
        1.90297339403512403365723e-17,
        -1.287626848722952146914993e+17,
    ),
    (
        19.5,
        5.0,
        1.440188136010012622401272e-10,
        1.724482245280114273059225e+8,
        5.78994125327591931660017e-10,
        -6.954194981259833221401635e+8,
    ),
    (
        19.5,
        10.0,
        2.585925667113011326792058e-4,
        8.821668238159702903692777e+1,
        5.640926923586662309565079e-4,
        -1.942732336173532712181181e+2,
    ),
    (
        19.5,
        30.0,
        1.541177072296508550331578e+9,
        9.06683217407161697274317e-12,
        1.820148973373972807978722e+9,
        -1.092045058447688015732772e-11,
    ),
    (
        19.5,
        60.0,
        2.482583686640670586251322e+23,
        3.192400518302517650671793e-26,
        2.591654107790224131358555e+23,
        -3.380779787952872269702222e-26,
    ),
    (
        20.0,
        0.001,
        3.919904396290320879215595e-85,
        6.377706556397376453386486e+82,
        7.83980880191374729563515e-81,
        -1.275541312957819093528789e+87,
    ),
    (
        20.0,
        0.1,
        3.920371031419977824782234e-45,
        6.376867526661178573932785e+42,
        7.840835404502276895871904e-43,
        -1.275390286439901049377858e+45,
    ),
    (
        20.0,
        1.0,
        3.966835985819020055732078e-25,
        6.294369360424535166742005e+22,
        7.943111713659184691850316e-24,
        -1.26052907611682912056412e+24,
    ),
    (
        20.0,
        2.0,
        4.310560576109548332183203e-19,
        5.770856852700241004950015e+16,
        4.331042808492987112371632e-18,
        -5.801141519240453050004947e+17,
    ),
    (
        20.0,
        5.0,
        5.024239357971805992059611e-11,
        4.827000520621484691660232e+8,
        2.06871927362937297093419e-10,
        -1.993195442267683694668759e+9,
    ),
    (
        20.0,
        10.0,
        1.250799735644947559147502e-4,
        1.787442782077054807838773e+2,
        2.784778117775426582837125e-4,
        -4.015325803619963781469279e+2,
    ),
    (
        20.0,
        30.0,
        1.126985104448377142694557e+9,
        1.230451647544247653172884e-11,
        1.341515688427956897677396e+9,
        -1.493066002078445834323405e-11,
    ),
    (
        20.0,
        60.0,
        2.109173486305723986797715e+23,
        3.748295400687472383661562e-26,
        2.207414063526263294488039e+23,
        -3.979106858411277013426397e-26,
    ),
    (
        25.0,
        0.001,
        1.921340926401133423718195e-108,
        1.040939674430211040996202e+106,
        4.803352319697719854915045e-104,
        -2.602349188244151869065671e+110,
    ),
    (
        25.0,
        0.1,
        1.921525660798005319840167e-58,
        1.040831259948893551279058e+56,
        4.803851104279970819500142e-56,
        -2.602099833758610480431607e+58,
    ),
    (
        25.0,
        1.0,
        1.939901124613000607812793e-33,
        1.030155271004047335328645e+31,
        4.853482062976197279292657e-32,
        -2.577533363252715573687516e+32,
    ),
    (
        25.0,
        2.0,
        6.699556894866545021958278e-26,
        2.975749852836223068725345e+23,
        8.40017703972839116321424e-25,
        -3.732063896552382746685213e+24,
    ),
    (
        25.0,
        5.0,
        7.274325905901249061560905e-16,
        2.695928245336732527714133e+13,
        3.70649613502685552709418e-15,
        -1.375736048646254283497659e+14,
    ),
    (
        25.0,
        10.0,
        4.944018974211225085257499e-8,
        3.755663662546819213449527e+5,
        1.32791084039772425430841e-7,
        -1.013914698904651495498186e+6,
    ),
    (
        25.0,
        30.0,
        3.389259984266374821713581e+7,
        3.777531979133627701944154e-10,
        4.378722424246314568628756e+7,
        -4.95464184687744055453511e-10,
    ),
    (
        25.0,
        60.0,
        3.32616577740637324336691e+22,
        2.312680313561324975865706e-25,
        3.579705520686518008278129e+22,
        -2.521808214613041136486492e-25,
    ),
    (
        40.0,
        0.001,
        1.114692574084678162810614e-180,
        1.121385419325646148750836e+178,
        4.458770297698093746136442e-176,
        -4.485541678740258115906786e+182,
    ),
    (
        40.0,
        0.1,
        1.114760538369682617229495e-100,
        1.121313545197367412023409e+98,
        4.459055748099705400221214e-98,
        -4.485268556579900801141052e+100,
    ),
    (
        40.0,
        1.0,
        1.121509741331485958103247e-60,
        1.114220651178782830698925e+58,
        4.487406461626775930939499e-59,
        -4.458310851839911508398503e+59,
    ),
    (
        40.0,
        2.0,
        1.255869192165416306457436e-48,
        9.940839884744111934015421e+45,
        2.514799703135443798417664e-47,
        -1.990715192704206444139715e+47,
    ),
    (
        40.0,
        5.0,
        1.180426980359562536144001e-32,
        1.050756721947498337760093e+30,
        9.515133692572957471929293e-32,
        -8.473128349924045515863139e+30,
    ),
    (
        40.0,
        10.0,
        2.042123273987862065995614e-20,
        5.938224680649349993701794e+17,
        8.414016066821833151652588e-20,
        -2.450179319043196071264767e+18,
    ),
    (
        40.0,
        30.0,
        2.405569763953388129884433e+1,
        4.156854769501440619669834e-4,
        3.995009009185772175213849e+1,
        -6.953305337447007515662479e-4,
    ),
    (
        40.0,
        60.0,
        1.348377354388244037626265e+19,
        5.14224765304620392057698e-22,
        1.612783801995831774119246e+19,
        -6.209932938084406331889243e-22,
    ),
];

/// (nu, x, lambda = (I K)', 1 - x^2 lambda^2)
pub const LAMBDA: &[(f64, f64, f64, f64)] = &[
    (
        0.0,
        0.001,
        -9.999929763103214556651973e+2,
        1.404733002483033633664915e-5,
    ),
    (
        0.0,
        0.1,
        -9.756989587465526310370023,
        4.801154190089288136078535e-2,
    ),
    (
        0.0,
        1.0,
        -5.24108411449883858409955e-1,
        7.253103730474792504660235e-1,
    ),
    (
        0.0,
        2.0,
        -1.376724169744358614022178e-1,
        9.241852224176682579916233e-1,
    ),
    (
        0.0,
        5.0,
        -2.034950366028821870109373e-2,
        9.896474425194979097343586e-1,
    ),
    (
        0.0,
        10.0,
        -5.019323028873525542703192e-3,
        9.974806396331819897471164e-1,
    ),
    (
        0.0,
        30.0,
        -5.557877663694298091366145e-4,
        9.997219899628786720965122e-1,
    ),
    (
        0.0,
        60.0,
        -1.389033678072697969434534e-4,
        9.999305410758824739685694e-1,
    ),
    (
        0.5,
        0.001,
        -9.98667666133555479359582e-1,
        9.999990026628926193573248e-1,
    ),
    (
        0.5,
        0.1,
        -8.761548153210884734285179e-1,
        9.923235273958966926560014e-1,
    ),
    (
        0.5,
        1.0,
        -2.969970751450809621590008e-1,
        9.117927373552671321801337e-1,
    ),
    (
        0.5,
        2.0,
        -1.135527256945411373164262e-1,
        9.484231139493611879354153e-1,
    ),
    (
        0.5,
        5.0,
        -1.999001201545225333266217e-2,
        9.900099854905518635166829e-1,
    ),
    (
        0.5,
        10.0,
        -4.999999783578869643951428e-3,
        9.97500000216421125672238e-1,
    ),
    (
        0.5,
        30.0,
        -5.555555555555555555555553e-4,
        9.997222222222222222222222e-1,
    ),
    (
        0.5,
        60.0,
        -1.388888888888888888888889e-4,
        9.999305555555555555555556e-1,
    ),
    (
        1.0,
        0.001,
        -3.386845299075620554809204e-3,
        9.999999999885292789201294e-1,
    ),
    (
        1.0,
        0.1,
        -1.091776326613351431148972e-1,
        9.998808024452646656447195e-1,
    ),
    (
        1.0,
        1.0,
        -1.562382903598511797461768e-1,
        9.755895966254308339144565e-1,
    ),
    (
        1.0,
        2.0,
        -8.480340934927376901145757e-2,
        9.7123352705095802522043e-1,
    ),
    (
        1.0,
        5.0,
        -1.902180250493886686746138e-2,
        9.90954275736577536243058e-1,
    ),
    (
        1.0,
        10.0,
        -4.942808125834991705793103e-3,
        9.975568647831179576798899e-1,
    ),
    (
        1.0,
        30.0,
        -5.548598971551965046464805e-4,
        9.997229174450760322820291e-1,
    ),
    (
        1.0,
        60.0,
        -1.388454672409357927058625e-4,
        9.999305989704159264122731e-1,
    ),
    (
        2.5,
        0.001,
        -3.809521272062338185945496e-5,
        9.999999999999985487547678e-1,
    ),
    (
        2.5,
        0.1,
        -3.786238076091626790882987e-3,
        9.999998566440123115397494e-1,
    ),
    (
        2.5,
        1.0,
        -2.673383820236755646906894e-2,
        9.992853018949696330168475e-1,
    ),
    (
        2.5,
        2.0,
        -2.975629535730119843881445e-2,
        9.964582515464362205725522e-1,
    ),
    (
        2.5,
        5.0,
        -1.420782779377311273480782e-2,
        9.949534407345622060987238e-1,
    ),
    (
        2.5,
        10.0,
        -4.572499607303858968949866e-3,
        9.979092247341206055518694e-1,
    ),
    (
        2.5,
        30.0,
        -5.500308641975308641975305e-4,
        9.997277194435871056241427e-1,
    ),
    (
        2.5,
        60.0,
        -1.385421489197530864197531e-4,
        9.999309018627017090513546e-1,
    ),
    (
        3.5,
        0.001,
        -1.269841038961127724097182e-5,
        9.999999999999998387503736e-1,
    ),
    (
        3.5,
        0.1,
        -1.267540739364205195795611e-3,
        9.999999839334047405204385e-1,
    ),
    (
        3.5,
        1.0,
        -1.084798651240041064444936e-2,
        9.998823211886267787753153e-1,
    ),
    (
        3.5,
        2.0,
        -1.528436917991796977006436e-2,
        9.99065552235087894752946e-1,
    ),
    (
        3.5,
        5.0,
        -1.08837970360055799010091e-2,
        9.970385740519759038420968e-1,
    ),
    (
        3.5,
        10.0,
        -4.204625708579012370479728e-3,
        9.982321122650756438139327e-1,
    ),
    (
        3.5,
        30.0,
        -5.445975651577503429355286e-4,
        9.997330721428218248827245e-1,
    ),
    (
        3.5,
        60.0,
        -1.381968510213048696844993e-4,
        9.999312458693240629619086e-1,
    ),
    (
        5.0,
        0.001,
        -4.166666369047642385840284e-6,
        9.999999999999999826388914e-1,
    ),
    (
        5.0,
        0.1,
        -4.163692798346505828193903e-4,
        9.999999982663662280997442e-1,
    ),
    (
        5.0,
        1.0,
        -3.889950695310958501787324e-3,
        9.999848682835880497904946e-1,
    ),
    (
        5.0,
        2.0,
        -6.485052162467250900588985e-3,
        9.998317763938003153313186e-1,
    ),
    (
        5.0,
        5.0,
        -7.015963686618363281185037e-3,
        9.987694063387013116188129e-1,
    ),
    (
        5.0,
        10.0,
        -3.571782722234997414200893e-3,
        9.98724236818514355130843e-1,
    ),
    (
        5.0,
        30.0,
        -5.333456710289171349173994e-4,
        9.997439881556752426913926e-1,
    ),
    (
        5.0,
        60.0,
        -1.374678428563358425891742e-4,
        9.999319693318495327167426e-1,
    ),
    (
        10.0,
        0.001,
        -5.050504971590910280029286e-7,
        9.99999999999999999744924e-1,
    ),
    (
        10.0,
        0.1,
        -5.049716017474402174000907e-5,
        9.999999999745003681428625e-1,
    ),
    (
        10.0,
        1.0,
        -4.972660061225257182393614e-4,
        9.999997527265191549522149e-1,
    ),
    (
        10.0,
        2.0,
        -9.502565702432000119647423e-4,
        9.999963880498028385211262e-1,
    ),
    (
        10.0,
        5.0,
        -1.791293570584879142978633e-3,
        9.999197816835995318650892e-1,
    ),
    (
        10.0,
        10.0,
        -1.764214945638127684807401e-3,
        9.996887545625587058177882e-1,
    ),
    (
        10.0,
        30.0,
        -4.743620103388364596408459e-4,
        9.997974826148325678505949e-1,
    ),
    (
        10.0,
        60.0,
        -1.333064527686902346375209e-4,
        9.999360258027408242548335e-1,
    ),
    (
        19.5,
        0.001,
        -6.760982343784385989789572e-8,
        9.999999999999999999954289e-1,
    ),
    (
        19.5,
        0.1,
        -6.760712838988215170448393e-6,
        9.999999999995429276190874e-1,
    ),
    (
        19.5,
        1.0,
        -6.73411875292145611418933e-5,
        9.999999954651644621551573e-1,
    ),
    (
        19.5,
        2.0,
        -1.330919948302618667403091e-4,
        9.999999291460836484061941e-1,
    ),
    (
        19.5,
        5.0,
        -3.069821502156773450693889e-4,
        9.999976440489862239827441e-1,
    ),
    (
        19.5,
        10.0,
        -4.752282488312313081249282e-4,
        9.999774158111512801298823e-1,
    ),
    (
        19.5,
        30.0,
        -3.273627865522142353388751e-4,
        9.999035502453826924803366e-1,
    ),
    (
        19.5,
        60.0,
        -1.194708327259457380111597e-4,
        9.999486161924599687342921e-1,
    ),
    (
        20.0,
        0.001,
        -6.265664136667426347415291e-8,
        9.999999999999999999960741e-1,
    ),
    (
        20.0,
        0.1,
        -6.265426832224581260821859e-6,
        9.999999999996074442661004e-1,
    ),
    (
        20.0,
        1.0,
        -6.24200622880827445530419e-5,
        9.999999961037358239518704e-1,
    ),
    (
        20.0,
        2.0,
        -1.2343858540295519843616e-4,
        9.999999390516625348693432e-1,
    ),
    (
        20.0,
        5.0,
        -2.858197834263404424718109e-4,
        9.999979576762850529961329e-1,
    ),
    (
        20.0,
        10.0,
        -4.473690739237462959609903e-4,
        9.999799860911696609621924e-1,
    ),
    (
        20.0,
        30.0,
        -3.199295526806299190596556e-4,
        9.999078805731894148408345e-1,
    ),
    (
        20.0,
        60.0,
        -1.185867032099932788690322e-4,
        9.999493738977584258911699e-1,
    ),
    (
        25.0,
        0.001,
        -3.205128197386349642692671e-8,
        9.999999999999999999989727e-1,
    ),
    (
        25.0,
        0.1,
        -3.205050788143489204592374e-6,
        9.999999999998972764944542e-1,
    ),
    (
        25.0,
        1.0,
        -3.197402029455115607675108e-5,
        9.999999989776620262036308e-1,
    ),
    (
        25.0,
        2.0,
        -6.348820460040107738515001e-5,
        9.999999838769915064704459e-1,
    ),
    (
        25.0,
        5.0,
        -1.51047566993370769243547e-4,
        9.999994296158126345792338e-1,
    ),
    (
        25.0,
        10.0,
        -2.562701923251645864094875e-4,
        9.999934325588525623153913e-1,
    ),
    (
        25.0,
        30.0,
        -2.518053626533795915491597e-4,
        9.999429346534050999877836e-1,
    ),
    (
        25.0,
        60.0,
        -1.092376945896615521256785e-4,
        9.999570416538906489781467e-1,
    ),
    (
        40.0,
        0.001,
        -7.817385858819186972286916e-9,
        9.999999999999999999999389e-1,
    ),
    (
        40.0,
        0.1,
        -7.817312395071920092707668e-7,
        9.999999999999938889626918e-1,
    ),
    (
        40.0,
        1.0,
        -7.810044467194698235720482e-6,
        9.999999999390032054204415e-1,
    ),
    (
        40.0,
        2.0,
        -1.557617857055927775408265e-5,
        9.999999990295306445521997e-1,
    ),
    (
        40.0,
        5.0,
        -3.818624599687592490388142e-5,
        9.99999963545265416651935e-1,
    ),
    (
        40.0,
        10.0,
        -7.136425723683987203373139e-5,
        9.999994907142789034147953e-1,
    ),
    (
        40.0,
        30.0,
        -1.199888252631300000575849e-4,
        9.999870424136307766502852e-1,
    ),
    (
        40.0,
        60.0,
        -7.999922529866748478111629e-5,
        9.999769604462258069450095e-1,
    ),
];

/// (nu, x, J, Y, J', Y')
pub const JY: &[(f64, f64, f64, f64, f64, f64)] = &[
    (
        0.0,
        0.01,
        9.999750001562495659718596e-1,
        -3.005455637083645944523087,
        -4.999937500260416228212128e-3,
        6.367859628206065504934519e+1,
    ),
    (
        0.0,
        0.5,
        9.384698072408129042284047e-1,
        -4.445187335067065571483985e-1,
        -2.422684576748738863839546e-1,
        1.471472392670243069188585,
    ),
    (
        0.0,
        1.9,
        2.818185593743855223306687e-1,
        4.968199712838201912930742e-1,
        -5.811570727134340748219421e-1,
        1.644057723315953144304983e-1,
    ),
    (
        0.0,
        2.1,
        1.66606980331990276127741e-1,
        5.182937375137607332013417e-1,
        -5.682921357570386593021482e-1,
        5.167861213042353384785104e-2,
    ),
    (
        0.0,
        7.3,
        2.882169476350143990357837e-1,
        6.277388637403759773191952e-2,
        -8.257043049325783105143304e-2,
        2.845943718680721084504596e-1,
    ),
    (
        0.0,
        25.0,
        9.626678327595811617350334e-2,
        -1.272494322680061378343287e-1,
        1.253502495802899046518093e-1,
        9.882996478323741005333031e-2,
    ),
    (
        0.0,
        48.0,
        -1.147148783241972523697519e-1,
        -1.013358683786073186466984e-2,
        1.132895341962469374185423e-2,
        -1.146155510352085146656368e-1,
    ),
    (
        0.5,
        0.01,
        7.978712627933422048512865e-2,
        -7.97844666907275996469703,
        3.989090355106049023485758,
        3.990021205799173241510974e+2,
    ),
    (
        0.5,
        0.5,
        5.409737899345280913309131e-1,
        -9.90245880243404880023352e-1,
        4.492720903088767886924388e-1,
        1.531219670177932971354265,
    ),
    (
        0.5,
        1.9,
        5.477623036828647713772525e-1,
        1.871349693463029732946936e-1,
        -3.312829439996884461849769e-1,
        4.985162591180481971555292e-1,
    ),
    (
        0.5,
        2.1,
        4.752767376437599611468743e-1,
        2.77964557472163465072702e-1,
        -3.911256854825824986549448e-1,
        4.090947001503877103572527e-1,
    ),
    (
        0.5,
        7.3,
        2.511427147490214741741859e-1,
        -1.553561225830856075850012e-1,
        1.381545667783581089353158e-1,
        2.617835450629314475553765e-1,
    ),
    (
        0.5,
        25.0,
        -2.112028359965044501778374e-2,
        -1.581730840420505620348448e-1,
        1.585954897140435709352005e-1,
        -1.795682191880943377708685e-2,
    ),
    (
        0.5,
        48.0,
        -8.847583026380305109611438e-2,
        7.372204136793367064121402e-2,
        -7.28004181360190555256295e-2,
        -8.924376819471902683196035e-2,
    ),
    (
        1.0,
        0.01,
        4.999937500260416228212128e-3,
        -6.367859628206065504934519e+1,
        4.999812501302079535588575e-1,
        6.364854172568981726432288e+3,
    ),
    (
        1.0,
        0.5,
        2.422684576748738863839546e-1,
        -1.471472392670243069188585,
        4.539328918910651314604955e-1,
        2.498426051833779581228771,
    ),
    (
        1.0,
        1.9,
        5.811570727134340748219421e-1,
        -1.644057723315953144304983e-1,
        -2.405358415900084713714492e-2,
        5.833493251425545713540473e-1,
    ),
    (
        1.0,
        2.1,
        5.682921357570386593021482e-1,
        -5.167861213042353384785104e-2,
        -1.04008322409456693046869e-1,
        5.429026004330100339928393e-1,
    ),
    (
        1.0,
        7.3,
        8.257043049325783105143304e-2,
        -2.845943718680721084504596e-1,
        2.769059297592256547808969e-1,
        1.017594167669241888792731e-1,
    ),
    (
        1.0,
        25.0,
        -1.253502495802899046518093e-1,
        -9.882996478323741005333031e-2,
        1.012807932591697123595757e-1,
        -1.232962336766766414321954e-1,
    ),
    (
        1.0,
        48.0,
        -1.132895341962469374185423e-2,
        1.146155510352085146656368e-1,
        -1.144788584612884045834633e-1,
        -1.252141081776090925353728e-2,
    ),
    (
        2.5,
        0.01,
        5.319192410955080734054563e-7,
        -2.393693577633975164815064e+5,
        1.329790503880407099305554e-4,
        5.984154151639534431934358e+7,
    ),
    (
        2.5,
        0.5,
        9.236407819379724499932749e-3,
        -1.413854742228462222824235e+1,
        4.551966052875268013881057e-2,
        6.817127156100177328983413e+1,
    ),
    (
        2.5,
        1.9,
        2.029180941904098727804283e-1,
        -8.965089923250897795086345e-1,
        2.084334262972714424093592e-1,
        7.303468806113602473517893e-1,
    ),
    (
        2.5,
        2.1,
        2.451329959176707687228044e-1,
        -7.678397898393283865932889e-1,
        2.124618183529172961001664e-1,
        5.711823252469468667634537e-1,
    ),
    (
        2.5,
        7.3,
        -3.008494315874998083778267e-1,
        4.340089982547954146213212e-2,
        -1.792238371763752271761914e-2,
        -2.872876972348823601551407e-1,
    ),
    (
        2.5,
        25.0,
        2.038136153326055437517005e-3,
        1.599482872706067727392116e-1,
        -1.592217090013691853793078e-1,
        -1.201468489092254737531208e-3,
    ),
    (
        2.5,
        48.0,
        9.296825494530957862174219e-2,
        -6.809630973508148298072613e-2,
        6.70366982923695665234959e-2,
        9.355838892433716313971915e-2,
    ),
    (
        3.7,
        0.01,
        1.985093881021556399617137e-10,
        -4.33380198086392078203563e+8,
        7.344826241740040980509393e-8,
        1.603498707316713557278098e+11,
    ),
    (
        3.7,
        0.5,
        3.78608560810518202659121e-4,
        -2.295095423372099767700605e+2,
        2.781517426519612334267599e-3,
        1.67681034948757383574921e+3,
    ),
    (
        3.7,
        1.9,
        4.408763449486414713906116e-2,
        -2.33709344947529616462121,
        7.662493423274066299818093e-2,
        3.538030742941264986532228,
    ),
    (
        3.7,
        2.1,
        6.10829586847902968309668e-2,
        -1.76931923045367681234386,
        9.337187424218710244407066e-2,
        2.258365063612024957665991,
    ),
    (
        3.7,
        7.3,
        -1.954602961576720361371614e-2,
        3.159182717392054564240509e-1,
        -2.732497097440002704994695e-1,
        -4.520672266260213403775524e-2,
    ),
    (
        3.7,
        25.0,
        1.579139296116469335910159e-1,
        -2.838265690249807264443583e-2,
        2.484925804137391297553942e-2,
        1.567911265986706270624225e-1,
    ),
    (
        3.7,
        48.0,
        -8.806375293954144382929006e-2,
        -7.447493054188474805390695e-2,
        7.518024346947871500124149e-2,
        -8.70263673531457159874776e-2,
    ),
    (
        10.0,
        0.01,
        2.691138339236344981301841e-30,
        -1.182808190517663198936538e+28,
        2.691137115991413597183647e-27,
        1.182807533401773610271314e+31,
    ),
    (
        10.0,
        0.5,
        2.613177360822803086243615e-13,
        -1.219636233495696305346402e+11,
        5.220412867683373711080564e-12,
        2.435881641846751346517113e+12,
    ),
    (
        10.0,
        1.9,
        1.519561513380089619157226e-7,
        -2.134054550874671971501142e+5,
        7.865548551980943549770747e-7,
        1.100369677641148732017876e+6,
    ),
    (
        10.0,
        2.1,
        4.058991410661927979101948e-7,
        -8.023030490141215297008197e+4,
        1.89377944405866646302789e-6,
        3.7254025703512885950796e+5,
    ),
    (
        10.0,
        7.3,
        3.21116239540485012116309e-2,
        -1.495108261678633794796767,
        3.199970661911718630990566e-2,
        1.225885128524044162274527,
    ),
    (
        10.0,
        25.0,
        -7.517984394852328384132298e-2,
        -1.487183904998064975723111e-1,
        1.381640524528476960223562e-1,
        -6.54065655197664086225987e-2,
    ),
    (
        10.0,
        48.0,
        4.933113060128529515567144e-2,
        1.054794364233949284842329e-1,
        -1.037095746571200842403788e-1,
        4.710381476075557842817385e-2,
    ),
    (
        20.25,
        0.01,
        4.891127732634818051877686e-66,
        -3.213780033097490651898983e+63,
        9.904532507731861348019312e-63,
        6.507903732274298487707154e+66,
    ),
    (
        20.25,
        0.5,
        1.236729391767384296985982e-31,
        -1.271402815547859401603275e+29,
        5.007298868524302608032445e-30,
        5.147529936619808388107307e+30,
    ),
    (
        20.25,
        1.9,
        6.541954905707476077486891e-20,
        -2.413473264822093080632917e+17,
        6.943044259101720720709187e-19,
        2.560312988154141335329098e+18,
    ),
    (
        20.25,
        2.1,
        4.918035572019032297378071e-19,
        -3.213566549613923717626824e+16,
        4.718033643949529589636323e-18,
        3.08121239375841799099963e+17,
    ),
    (
        20.25,
        7.3,
        2.48564597486408689378845e-8,
        -6.781471825931663092475703e+5,
        6.455443112499519036352103e-8,
        1.747263401281984994361385e+6,
    ),
    (
        20.25,
        25.0,
        8.392685072555127556849078e-2,
        1.891477674055257674333822e-1,
        -1.170739310875498834083754e-1,
        3.956443235268321954014366e-2,
    ),
    (
        20.25,
        48.0,
        7.602262796058266227393997e-2,
        9.405604168145712140942125e-2,
        -8.625331264150739594283055e-2,
        6.774649724055350725643897e-2,
    ),
];

/// (nu, s, j_{nu,s}, j'_{nu,s})
pub const ZEROS: &[(f64, u32, f64, f64)] = &[
    (
        0.0,
        1,
        2.404825557695772768621632,
        3.831705970207512315614436,
    ),
    (
        0.0,
        2,
        5.520078110286310649596604,
        7.01558666981561875353705,
    ),
    (
        0.0,
        5,
        1.493091770848778594776259e+1,
        1.647063005087763281255246e+1,
    ),
    (
        0.0,
        10,
        3.063460646843197511754958e+1,
        3.218967991097440362662298e+1,
    ),
    (
        0.5,
        1,
        3.141592653589793238462643,
        1.165561185207211306833918,
    ),
    (
        0.5,
        2,
        6.283185307179586476925287,
        4.604216777200576514595972,
    ),
    (
        0.5,
        5,
        1.570796326794896619231322e+1,
        1.410172513356587324280699e+1,
    ),
    (
        0.5,
        10,
        3.141592653589793238462643e+1,
        2.982836921309550427719384e+1,
    ),
    (
        1.0,
        1,
        3.831705970207512315614436,
        1.84118378134065930264363,
    ),
    (
        1.0,
        2,
        7.01558666981561875353705,
        5.331442773525032636884016,
    ),
    (
        1.0,
        5,
        1.647063005087763281255246e+1,
        1.486358863390903310500491e+1,
    ),
    (
        1.0,
        10,
        3.218967991097440362662298e+1,
        3.060192297266909419233016e+1,
    ),
    (
        1.01,
        1,
        3.845179165849485318835325,
        1.85395165413061407266915,
    ),
    (
        1.01,
        2,
        7.029982314237030251095793,
        5.345651654276061688689291,
    ),
    (
        1.01,
        5,
        1.64857500122195463852919e+1,
        1.487867773420378790346766e+1,
    ),
    (
        1.01,
        10,
        3.220508148813224777816724e+1,
        3.061731669073366667892759e+1,
    ),
    (
        2.0,
        1,
        5.135622301840682556301402,
        3.054236928227140322755932,
    ),
    (
        2.0,
        2,
        8.417244140399864857783614,
        6.706133194158459146634394,
    ),
    (
        2.0,
        5,
        1.795981949498782645511514e+1,
        1.634752231832178315733481e+1,
    ),
    (
        2.0,
        10,
        3.37165195092226999219592e+1,
        3.212732702044347429140379e+1,
    ),
    (
        3.3,
        1,
        6.745784300758786335946288,
        4.538552234860738663056546,
    ),
    (
        3.3,
        2,
        1.015577214894617480071965e+1,
        8.399095287283507709135895,
    ),
    (
        3.3,
        5,
        1.983775951590754951115942e+1,
        1.821417699390649989245245e+1,
    ),
    (
        3.3,
        10,
        3.566494511677939522993038e+1,
        3.407229247211368745173974e+1,
    ),
    (
        10.0,
        1,
        1.447550068655454123845164e+1,
        1.17708766749555819319629e+1,
    ),
    (
        10.0,
        2,
        1.84334636669665826420351e+1,
        1.644785274848649837718499e+1,
    ),
    (
        10.0,
        5,
        2.888737506353045702705644e+1,
        2.71820215271905319402211e+1,
    ),
    (
        10.0,
        10,
        4.523157410353504485357276e+1,
        4.360676490137951578924601e+1,
    ),
];
