#ifndef SVAR_OPTIMISM_DATA_HPP
#define SVAR_OPTIMISM_DATA_HPP

// Bundled quarterly demo dataset used by the replicate-optimism command.
namespace svar::bundled {

inline const char* optimism_csv = R"CSV(productivity,stock_prices,consumption,real_interest_rate,hours_worked
0.2172072,-11.28895,-4.331866,0.008022252,-7.599184
0.2129482,-11.17647,-4.324255,0.021877748,-7.592445
0.2069894,-11.11805,-4.318455,0.018811208,-7.580577
0.2003908,-11.08317,-4.301382,0.012867114,-7.572133
0.1945243,-11.02211,-4.293948,0.024503568,-7.577512
0.2002138,-11.06306,-4.291474,0.000876887,-7.577491
0.2018381,-10.9941,-4.281079,0.01099088,-7.559449
0.2071646,-10.98979,-4.277719,0.01738747,-7.560494
0.2136135,-10.93201,-4.269554,0.01550555,-7.555938
0.2129969,-10.88305,-4.271624,0.01472101,-7.545838
0.2114318,-10.89209,-4.265596,0.02821396,-7.536372
0.217985,-10.88705,-4.258614,0.02606324,-7.526614
0.223914,-10.87846,-4.256108,0.02909368,-7.528919
0.2312133,-10.8128,-4.259637,0.0204487,-7.526286
0.2310023,-10.79951,-4.25259,0.02195326,-7.529763
0.2343825,-10.78988,-4.242053,0.02520426,-7.530452
0.2361473,-10.75332,-4.233807,0.02168389,-7.529057
0.2346905,-10.79985,-4.232039,0.03193053,-7.532495
0.2379922,-10.84199,-4.229329,0.03390555,-7.538778
0.2446486,-10.85847,-4.223762,0.03082087,-7.537074
0.2503421,-10.88026,-4.221166,0.01594722,-7.530944
0.2563458,-10.82772,-4.219774,0.01948088,-7.534675
0.2630525,-10.7738,-4.221199,0.01657038,-7.532647
0.271677,-10.73535,-4.219955,0.02623508,-7.534365
0.2711997,-10.76397,-4.210163,0.01285879,-7.54018
0.2776865,-10.80477,-4.201619,0.0163446,-7.545373
0.2804959,-10.83419,-4.195499,0.01856938,-7.551076
0.2865091,-10.80226,-4.198036,0.01488077,-7.552793
0.2879897,-10.84563,-4.188711,0.01173952,-7.559644
0.2909235,-10.8439,-4.182251,0.01130605,-7.568499
0.2948053,-10.80695,-4.185992,0.01882353,-7.573851
0.2952076,-10.83592,-4.179256,0.02047528,-7.579678
0.2952427,-10.93188,-4.183405,0.01454007,-7.578836
0.3010773,-10.89356,-4.188047,0.0198982,-7.592393
0.3031996,-10.87466,-4.180399,0.00794269,-7.592504
0.304791,-10.89596,-4.181688,0.001533023,-7.591603
0.3058347,-10.91179,-4.176054,0.002374977,-7.592054
0.3080794,-10.86615,-4.173357,-0.004896565,-7.594023
0.3104918,-10.88473,-4.169314,-0.003932202,-7.600083
0.3106364,-10.89046,-4.165683,0.005256918,-7.591482
0.3178823,-10.94153,-4.167542,0.007036305,-7.593192
0.3221096,-10.83824,-4.161267,-7.196922e-05,-7.594384
0.3277225,-10.8364,-4.152658,-0.002411139,-7.591142
0.3276063,-10.79786,-4.152624,-0.005367547,-7.589137
0.3256804,-10.82229,-4.151069,-0.001589763,-7.590263
0.330693,-10.80722,-4.144305,0.005418809,-7.587444
0.3351644,-10.84143,-4.138347,0.007902653,-7.588108
0.33821,-10.78183,-4.135021,0.01389978,-7.582776
0.3432045,-10.72517,-4.128064,0.01839136,-7.575023
0.3460678,-10.83014,-4.127651,0.02553094,-7.570744
0.351079,-10.83636,-4.125324,0.02335119,-7.572696
0.3606189,-10.83857,-4.129619,0.01832473,-7.571788
0.3550304,-10.84206,-4.127249,0.01535915,-7.569612
0.3558828,-10.88804,-4.128263,0.01842871,-7.567735
0.3581371,-10.8064,-4.122092,0.02633738,-7.56816
0.3606053,-10.85458,-4.116443,0.02167613,-7.560665
0.362446,-10.74462,-4.110217,0.03210245,-7.553616
0.362773,-10.64772,-4.105619,0.04179344,-7.549104
0.3629221,-10.63993,-4.107649,0.04688624,-7.541315
0.3617215,-10.63884,-4.108472,0.0363523,-7.543445
0.3647238,-10.56818,-4.098648,0.02667227,-7.541348
0.3719808,-10.51257,-4.091802,0.01435714,-7.544143
0.3737447,-10.55113,-4.082438,0.01113901,-7.54749
0.3805558,-10.55338,-4.083058,0.01132902,-7.549851
0.3877986,-10.59048,-4.076127,0.007006555,-7.545047
0.3895985,-10.48226,-4.073705,0.01065332,-7.541427
0.3925203,-10.50079,-4.075292,0.02165404,-7.54359
0.399278,-10.53841,-4.072805,0.02796897,-7.543831
0.3989608,-10.49477,-4.072211,0.02736804,-7.541878
0.400451,-10.42974,-4.072335,0.02909335,-7.539265
0.4039127,-10.37158,-4.071549,0.0351404,-7.543449
0.3997994,-10.34297,-4.063015,0.02913425,-7.539978
0.4081859,-10.39601,-4.053595,0.03376276,-7.544024
0.4102397,-10.42797,-4.04528,0.02995925,-7.54779
0.4159731,-10.42004,-4.039279,0.02532931,-7.545067
0.4223822,-10.37686,-4.038018,0.02900161,-7.54885
0.4264112,-10.30297,-4.033421,0.02253806,-7.550464
0.4310673,-10.32436,-4.029791,0.02902673,-7.561928
0.4338363,-10.30679,-4.027249,0.02292999,-7.564277
0.4373727,-10.26331,-4.018018,0.02176239,-7.562632
0.4390697,-10.18105,-4.015943,0.01710474,-7.563767
0.4411747,-10.15625,-4.010681,0.02026249,-7.567927
0.4478441,-10.24611,-4.004903,0.01695735,-7.578398
0.454255,-10.24319,-4.004294,0.02386405,-7.589607
0.4517123,-10.21035,-3.996225,0.02006265,-7.591055
0.4583846,-10.21367,-3.991933,0.02082797,-7.588918
0.4557918,-10.21449,-3.990599,0.02486727,-7.588361
0.4610495,-10.15727,-3.987899,0.01933316,-7.588538
0.4678089,-10.21402,-3.980193,0.01003406,-7.588972
0.4741824,-10.21278,-3.980474,0.007606099,-7.591023
0.4807721,-10.21015,-3.972264,0.01004213,-7.594075
0.4879153,-10.21011,-3.968153,0.0162123,-7.597076
0.4916676,-10.25797,-3.971839,0.01449751,-7.59434
0.4942112,-10.19865,-3.961752,0.02274934,-7.593114
0.4987834,-10.26713,-3.966112,0.01739414,-7.594748
0.5065332,-10.24249,-3.957611,0.019213,-7.584406
0.507178,-10.2567,-3.956817,0.01913936,-7.585629
0.5125,-10.2632,-3.943085,0.02506088,-7.588678
0.5182082,-10.35098,-3.931837,0.01968206,-7.580161
0.5289071,-10.31905,-3.921566,0.02103783,-7.578597
0.5330018,-10.31769,-3.923124,0.007358813,-7.571005
0.5315795,-10.22487,-3.911446,0.008592169,-7.56202
0.5276619,-10.20185,-3.907535,-0.002271326,-7.563213
0.5256529,-10.22164,-3.912401,-0.01058388,-7.562898
0.5261883,-10.24345,-3.900362,-0.008897296,-7.562617
0.5314509,-10.19172,-3.901379,-0.003165246,-7.557233
0.5305956,-10.18024,-3.902936,0.006160404,-7.548378
0.5325295,-10.11528,-3.90283,0.01295037,-7.549751
0.5370142,-10.1785,-3.900206,0.01374701,-7.548653
0.5309817,-10.13448,-3.894837,0.0146901,-7.545947
0.5337951,-10.10334,-3.88818,0.01482827,-7.54406
0.5416951,-10.11154,-3.886481,0.01232055,-7.533192
0.5465354,-10.07686,-3.883401,0.004915554,-7.534109
0.5536514,-10.10347,-3.883884,-0.002709443,-7.534242
0.5618278,-10.07548,-3.878162,0.0007498522,-7.52994
0.5612604,-10.08786,-3.875734,-0.004554885,-7.529098
0.5643471,-10.0225,-3.873244,0.00173303,-7.534275
0.5663585,-10.01015,-3.865848,-0.001938268,-7.54014
0.5704221,-9.984326,-3.857363,0.001365342,-7.541127
0.5700811,-9.919014,-3.852328,0.008471763,-7.547447
0.5806542,-9.972548,-3.846043,0.01865331,-7.547714
0.5875073,-9.86969,-3.842232,0.007120199,-7.553533
0.5947882,-9.768049,-3.838939,0.006400724,-7.555336
0.5977146,-9.746673,-3.834088,0.005834073,-7.55968
0.602659,-9.70061,-3.829471,0.01191417,-7.560826
0.6026095,-9.742725,-3.829499,0.02239814,-7.571608
0.6113492,-9.757197,-3.826118,0.006066597,-7.577654
0.610817,-9.79358,-3.828217,0.004334732,-7.579263
0.6085541,-9.75833,-3.824929,-0.002099175,-7.578765
0.6053539,-9.711184,-3.823911,-0.0002504479,-7.588299
0.6099599,-9.620982,-3.816454,0.006574678,-7.599647
0.61035,-9.538462,-3.807666,-0.000854423,-7.602431
0.6115945,-9.545713,-3.800874,0.005624341,-7.604922
0.6078518,-9.543951,-3.796561,0.01685498,-7.607155
0.6121126,-9.502318,-3.78545,0.03098877,-7.606472
0.6147698,-9.480643,-3.781807,0.03191961,-7.602424
0.6185824,-9.484035,-3.780321,0.02860828,-7.602641
0.6211193,-9.412139,-3.776181,0.02040997,-7.602703
0.6262397,-9.36811,-3.775351,0.02607828,-7.601677
0.625612,-9.318555,-3.766801,0.02075499,-7.593357
0.6340156,-9.346545,-3.763652,0.02897077,-7.59219
0.6350227,-9.395947,-3.760189,0.02502606,-7.590368
0.6422434,-9.469547,-3.747144,0.02902935,-7.584311
0.643454,-9.554367,-3.750666,0.02621737,-7.575097
0.6460343,-9.643512,-3.744566,0.02682974,-7.570481
0.6471517,-9.631869,-3.743444,0.02101753,-7.568802
0.6527005,-9.599809,-3.750287,0.03590678,-7.572178
0.6586625,-9.602732,-3.751897,0.03226396,-7.565059
0.6653236,-9.674264,-3.747594,0.03640046,-7.566384
0.6618802,-9.586951,-3.748823,0.03842044,-7.57131
0.6642858,-9.562512,-3.744197,0.02844359,-7.568638
0.6626805,-9.533049,-3.736839,0.02866682,-7.556935
0.6669248,-9.448002,-3.723996,0.03078949,-7.560317
0.6746517,-9.477614,-3.725184,0.01885483,-7.555523
0.6748521,-9.534198,-3.722547,0.03367892,-7.560579
0.6751914,-9.501659,-3.715211,0.03556027,-7.554429
0.6841889,-9.485252,-3.717335,0.0172359,-7.556441
0.6862963,-9.486581,-3.712064,0.01750843,-7.55894
0.6915495,-9.534447,-3.715618,0.01607405,-7.55183
0.7042568,-9.610286,-3.71152,0.00757572,-7.554864
0.712186,-9.548158,-3.714798,0.010867,-7.552035
0.7145189,-9.532041,-3.712605,0.01111345,-7.548379
0.7225983,-9.48785,-3.709679,0.01972793,-7.546538
0.7319163,-9.399126,-3.702517,0.02473047,-7.546448
0.7340537,-9.408612,-3.70557,0.02890056,-7.544795
0.736902,-9.45834,-3.702356,0.03019562,-7.547622
0.7371315,-9.370352,-3.689915,0.02756445,-7.548966
0.7444257,-9.404836,-3.681723,0.03037445,-7.551735
0.7466946,-9.333736,-3.674594,0.02131856,-7.560287
0.7463832,-9.369279,-3.672708,0.0162407,-7.560463
0.7456525,-9.411026,-3.672304,0.01879219,-7.557405
0.7509862,-9.389462,-3.662111,0.01592645,-7.549625
0.753004,-9.283737,-3.660012,0.01431773,-7.555788
0.7563437,-9.264427,-3.651442,0.01809083,-7.554824
0.7557982,-9.260014,-3.641877,0.01582237,-7.551534
0.7599396,-9.307778,-3.638958,0.02519383,-7.553197
0.7580374,-9.319946,-3.635631,0.0213748,-7.557937
0.7590588,-9.23776,-3.634812,0.02664683,-7.564096
0.7638463,-9.179209,-3.632374,0.03063566,-7.563364
0.7655311,-9.118369,-3.631977,0.02998138,-7.567666
0.7691492,-9.134564,-3.633104,0.02740232,-7.572585
0.7701023,-9.072113,-3.627731,0.02031707,-7.571309
0.7666888,-9.149108,-3.617677,0.01989416,-7.569369
0.7718866,-9.159732,-3.620381,0.02443851,-7.581502
0.7722554,-9.256154,-3.625069,0.01653296,-7.571947
0.7744316,-9.227414,-3.620262,0.02826044,-7.571161
0.7786751,-9.213847,-3.611937,0.0363087,-7.569604
0.7820274,-9.235165,-3.607756,0.03568447,-7.575682
0.7811493,-9.206477,-3.604987,0.03809454,-7.574328
0.7814186,-9.205583,-3.596567,0.03303862,-7.575409
0.7922154,-9.139303,-3.603451,0.03183226,-7.57142
0.7959299,-9.119124,-3.614894,0.02246986,-7.573665
0.796606,-9.119885,-3.605775,0.0323797,-7.570185
0.8102878,-9.186502,-3.598945,0.02795615,-7.563774
0.8103208,-9.197227,-3.589716,0.01859193,-7.559215
0.8161683,-9.226172,-3.585332,0.02445487,-7.554325
0.8202038,-9.276892,-3.583691,0.01613806,-7.552404
0.8280444,-9.342948,-3.579225,0.02281582,-7.550592
0.8292364,-9.241619,-3.572463,0.02489321,-7.546508
0.8410362,-9.161687,-3.566826,0.02219956,-7.546773
)CSV";

}  // namespace svar::bundled

#endif
