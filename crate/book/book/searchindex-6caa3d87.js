window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["intro.html#introduction","expansions.html#expansions-and-convergents","expansions.html#convergents-and-the-q-pair-recurrence","expansions.html#irrational-inputs","expansions.html#evaluation","geometry.html#cylinder-geometry","geometry.html#the-sampling-oracle","geometry.html#separation-constants","certificates.html#dimension-certificates","certificates.html#lower-check","certificates.html#upper-check","certificates.html#oversized-stages","certificates.html#bisection","families.html#digit-restricted-families","families.html#closed-form-lower-bound","families.html#upper-bound-for-e_l","families.html#schedules","cli.html#command-line-interface","cli.html#expand","cli.html#verify","cli.html#shapes","cli.html#dim-bounds","cli.html#cantor-demo","cli.html#constants","cli.html#exit-codes"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"7":{"tf":1.0}},"df":4,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"1":{"docs":{"22":{"tf":1.0}},"df":1}}},"1":{"docs":{"21":{"tf":1.0}},"df":1},"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,"1":{"docs":{},"df":0,"8":{"docs":{},"df":0,"2":{"docs":{},"df":0,"8":{"docs":{},"df":0,"1":{"docs":{},"df":0,"8":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}},"4":{"docs":{},"df":0,"1":{"docs":{},"df":0,"4":{"docs":{},"df":0,"2":{"docs":{},"df":0,"1":{"docs":{},"df":0,"3":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"5":{"docs":{"21":{"tf":1.0}},"df":1},"6":{"docs":{},"df":0,"2":{"docs":{"22":{"tf":1.0}},"df":1},"3":{"docs":{},"df":0,"0":{"docs":{},"df":0,"9":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.0}},"df":1}}}},"4":{"docs":{"22":{"tf":1.0}},"df":1}},"9":{"docs":{"14":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"0":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0}},"df":1}}},"1":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":2.449489742783178},"24":{"tf":1.0},"7":{"tf":1.0}},"df":11,".":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1},"5":{"docs":{"21":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"w":{"docs":{"6":{"tf":1.0}},"df":1}},"2":{"docs":{"0":{"tf":1.4142135623730951}},"df":1},"3":{"docs":{},"df":0,"+":{"docs":{},"df":0,"2":{"docs":{},"df":0,"/":{"docs":{},"df":0,"7":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{"14":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}},"w":{"docs":{"5":{"tf":1.0}},"df":1},"z":{"docs":{"0":{"tf":1.4142135623730951}},"df":1},"|":{"docs":{},"df":0,"q":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}},"0":{"docs":{"1":{"tf":1.0},"7":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"^":{"docs":{},"df":0,"6":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"0":{"docs":{"11":{"tf":1.0}},"df":1,"0":{"docs":{"19":{"tf":1.0}},"df":1,"0":{"docs":{"19":{"tf":1.0}},"df":1}}}},"2":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0}},"df":3},"e":{"docs":{"12":{"tf":1.0}},"df":1}},"2":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":9,"/":{"docs":{},"df":0,"|":{"docs":{},"df":0,"q":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"5":{"docs":{},"df":0,"6":{"docs":{"14":{"tf":1.0}},"df":1}},"^":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{"6":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"|":{"docs":{},"df":0,"q":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}},"ξ":{"docs":{},"df":0,"|":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"×":{"docs":{},"df":0,"2":{"docs":{"2":{"tf":1.0}},"df":1}},"π":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"3":{"docs":{"12":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"24":{"tf":1.0}},"df":6,"+":{"docs":{},"df":0,"4":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"7":{"tf":1.7320508075688772}},"df":3}}},"/":{"docs":{},"df":0,"2":{"docs":{"3":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"4":{"docs":{"15":{"tf":1.0},"24":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{"18":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"5":{"docs":{"19":{"tf":1.0}},"df":1,"0":{"docs":{"21":{"tf":1.0}},"df":1,"0":{"docs":{"19":{"tf":1.0}},"df":1}}},"6":{"docs":{},"df":0,"4":{"docs":{"17":{"tf":1.0}},"df":1}},"8":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"5":{"tf":1.0}},"df":5},"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}},"k":{"docs":{"5":{"tf":1.0}},"df":1},"s":{"docs":{"10":{"tf":1.0}},"df":1},"{":{"docs":{},"df":0,"|":{"docs":{},"df":0,"b":{"docs":{"15":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"+":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}},"0":{"docs":{"18":{"tf":1.0}},"df":1},"_":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":3}},"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"q":{"docs":{"18":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}}},"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"2":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"5":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"5":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0}},"df":4}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"18":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"(":{"docs":{"14":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}},"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}},"|":{"docs":{},"df":0,"^":{"docs":{"10":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"b":{"docs":{"15":{"tf":1.4142135623730951},"5":{"tf":2.0},"6":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1,"·":{"docs":{},"df":0,"|":{"docs":{},"df":0,"a":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0}},"df":1}},"d":{"docs":{"24":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"5":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"13":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2}}}},"t":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"21":{"tf":2.449489742783178},"8":{"tf":2.23606797749979}},"df":8,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}}}}}},"x":{"docs":{"5":{"tf":2.23606797749979}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0}},"df":4}}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1},"t":{"docs":{"12":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951}},"df":2}}},"|":{"docs":{},"df":0,"^":{"docs":{"10":{"tf":1.0},"9":{"tf":1.0}},"df":2},"−":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"−":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"c":{"docs":{"21":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{"17":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}}},"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"24":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":9,"i":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":8}}}}}},"f":{"docs":{"0":{"tf":1.0}},"df":1},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"10":{"tf":1.7320508075688772},"12":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":10,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{"0":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"21":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"24":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}},"e":{"docs":{"13":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"0":{"tf":1.7320508075688772},"18":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":3}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":5}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"23":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":4}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951}},"df":4}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}},"s":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"t":{"docs":{"1":{"tf":1.0}},"df":1}},"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":4}}}}},"′":{"docs":{},"df":0,"·":{"docs":{},"df":0,"g":{"docs":{"16":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"5":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"8":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"9":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"o":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":12}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"8":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":4}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"13":{"tf":1.7320508075688772},"19":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":5,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.449489742783178},"13":{"tf":2.449489742783178},"16":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":2.449489742783178},"6":{"tf":1.0}},"df":9,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{"12":{"tf":1.7320508075688772},"15":{"tf":1.0},"21":{"tf":2.449489742783178}},"df":3,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}},"k":{"docs":{"5":{"tf":1.4142135623730951}},"df":1},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"w":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}},"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":4,"^":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3}}},"{":{"docs":{},"df":0,"f":{"docs":{},"df":0,",":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0}},"df":3}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5}}},"d":{"docs":{},"df":0,"g":{"docs":{"5":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}},"df":2}}}},"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.4142135623730951}},"df":1,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":4}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951}},"df":2}}}}},"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":4,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"z":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":8,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"24":{"tf":1.0}},"df":2}},"p":{"docs":{"1":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":2.23606797749979}},"df":1,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"z":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"s":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":5}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0}},"df":4},"s":{"docs":{"17":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}}}}}}},"f":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":3,"(":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}},"6":{"docs":{},"df":0,"4":{"docs":{"14":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.0}},"df":3}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":7},"y":{"docs":{},"df":0,"’":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.7320508075688772}},"df":3,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.4142135623730951}},"df":1,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.0},"14":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"x":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"df":5}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0},"24":{"tf":1.0}},"df":2}}},"n":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"5":{"tf":1.0}},"df":4},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"2":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"df":4}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"g":{"docs":{"13":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}},"p":{"docs":{"12":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":4,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"16":{"tf":1.0}},"df":1,"t":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}},"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}},"c":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":1.7320508075688772},"21":{"tf":2.23606797749979},"22":{"tf":1.0}},"df":7,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}},"{":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"j":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{"12":{"tf":1.4142135623730951}},"df":1},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}},"i":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"8":{"docs":{"6":{"tf":1.0}},"df":1}}},"^":{"docs":{},"df":0,"j":{"docs":{"5":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":2}}}},"m":{"docs":{"0":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"z":{"docs":{"3":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":3}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":5}}}}}},"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"18":{"tf":1.4142135623730951},"24":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":4}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.7320508075688772},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"6":{"tf":1.0}},"df":5,"r":{"docs":{"15":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"j":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2,"|":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"|":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}},"k":{"docs":{"23":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"l":{"docs":{"0":{"tf":1.0},"13":{"tf":2.0},"14":{"tf":1.0},"15":{"tf":1.7320508075688772},"21":{"tf":1.4142135623730951}},"df":5,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"16":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"n":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"df":2}}},"v":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{"12":{"tf":1.0}},"df":1,"g":{"docs":{"12":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":4,"(":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.0}},"df":1},"γ":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"14":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":5,"/":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"e":{"docs":{},"df":0,"4":{"docs":{"14":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":2.0},"21":{"tf":2.0}},"df":3,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"5":{"tf":1.0}},"df":4}},"k":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"p":{"docs":{"0":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"u":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{"16":{"tf":1.0},"2":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"x":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":8}},"n":{"docs":{"10":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"20":{"tf":1.0}},"df":3}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}},"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":4,"t":{"docs":{},"df":0,"o":{"docs":{"5":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.7320508075688772}},"df":4}}},"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":5}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"5":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0}},"df":4,"s":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"p":{"docs":{"18":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1}},")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"q":{"docs":{"18":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.7320508075688772}},"df":1}},"n":{"docs":{"2":{"tf":1.4142135623730951}},"df":1,"/":{"docs":{},"df":0,"q":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0}},"df":4}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"’":{"docs":{"8":{"tf":1.0}},"df":1}}}},"s":{"docs":{"0":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"t":{"docs":{"10":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0},"3":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"9":{"tf":1.0}},"df":7}},"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":8}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":5,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"7":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"p":{"docs":{},"df":0,"2":{"docs":{},"df":0,"1":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}},"df":4,"(":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.7320508075688772}},"df":1}},"n":{"docs":{"18":{"tf":1.0},"2":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951}},"df":3}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{"15":{"tf":1.0}},"df":1,"+":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951}},"df":5,"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":6}}}}},"e":{"docs":{"0":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":2}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"6":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"3":{"tf":1.0}},"df":3}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"5":{"tf":2.23606797749979}},"df":2}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}},"df":7}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"3":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":3}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"3":{"tf":1.0},"7":{"tf":1.0}},"df":3,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{"20":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"s":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"21":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4,"(":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":2.0},"6":{"tf":1.4142135623730951}},"df":2}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0},"19":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":3}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"n":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"16":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951}},"df":3,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951}},"df":4}},"g":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":6}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}},"v":{"docs":{"14":{"tf":1.0}},"df":1}},"t":{"docs":{"0":{"tf":1.0},"13":{"tf":2.0},"14":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":6}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2,",":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,",":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"x":{"docs":{"17":{"tf":1.0}},"df":1}},"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"14":{"tf":1.0},"7":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":4}},"n":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{"7":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0}},"df":2},"r":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"24":{"tf":1.0}},"df":1}}}},"h":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"24":{"tf":1.0}},"df":3}},"m":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"9":{"tf":1.0}},"df":4},"p":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"5":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0}},"df":1}},"^":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0}},"df":3,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}},"x":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}},"e":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"23":{"tf":1.0}},"df":1}}}},"l":{"docs":{"22":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":6,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"8":{"tf":1.0}},"df":2,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{"5":{"tf":1.7320508075688772}},"df":1}}},"p":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.7320508075688772}},"df":3,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":5,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}},"df":4}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2}},"u":{"docs":{"17":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0},"24":{"tf":1.0}},"df":2,"i":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":2.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5},"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{"0":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"13":{"tf":1.0}},"df":1}}}},"t":{"docs":{"7":{"tf":1.0}},"df":1,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}}}}},"z":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":5}}},"breadcrumbs":{"root":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"7":{"tf":1.0}},"df":4,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"1":{"docs":{"22":{"tf":1.0}},"df":1}}},"1":{"docs":{"21":{"tf":1.0}},"df":1},"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,"1":{"docs":{},"df":0,"8":{"docs":{},"df":0,"2":{"docs":{},"df":0,"8":{"docs":{},"df":0,"1":{"docs":{},"df":0,"8":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}},"4":{"docs":{},"df":0,"1":{"docs":{},"df":0,"4":{"docs":{},"df":0,"2":{"docs":{},"df":0,"1":{"docs":{},"df":0,"3":{"docs":{},"df":0,"5":{"docs":{},"df":0,"6":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"5":{"docs":{"21":{"tf":1.0}},"df":1},"6":{"docs":{},"df":0,"2":{"docs":{"22":{"tf":1.0}},"df":1},"3":{"docs":{},"df":0,"0":{"docs":{},"df":0,"9":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.0}},"df":1}}}},"4":{"docs":{"22":{"tf":1.0}},"df":1}},"9":{"docs":{"14":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"0":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0}},"df":1}}},"1":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":2.449489742783178},"24":{"tf":1.0},"7":{"tf":1.0}},"df":11,".":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1},"5":{"docs":{"21":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"w":{"docs":{"6":{"tf":1.0}},"df":1}},"2":{"docs":{"0":{"tf":1.4142135623730951}},"df":1},"3":{"docs":{},"df":0,"+":{"docs":{},"df":0,"2":{"docs":{},"df":0,"/":{"docs":{},"df":0,"7":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{"14":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}},"w":{"docs":{"5":{"tf":1.0}},"df":1},"z":{"docs":{"0":{"tf":1.4142135623730951}},"df":1},"|":{"docs":{},"df":0,"q":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}},"0":{"docs":{"1":{"tf":1.0},"7":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"^":{"docs":{},"df":0,"6":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"0":{"docs":{"11":{"tf":1.0}},"df":1,"0":{"docs":{"19":{"tf":1.0}},"df":1,"0":{"docs":{"19":{"tf":1.0}},"df":1}}}},"2":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0}},"df":3},"e":{"docs":{"12":{"tf":1.0}},"df":1}},"2":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":9,"/":{"docs":{},"df":0,"|":{"docs":{},"df":0,"q":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"5":{"docs":{},"df":0,"6":{"docs":{"14":{"tf":1.0}},"df":1}},"^":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{"6":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"|":{"docs":{},"df":0,"q":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}},"ξ":{"docs":{},"df":0,"|":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"×":{"docs":{},"df":0,"2":{"docs":{"2":{"tf":1.0}},"df":1}},"π":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"3":{"docs":{"12":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"24":{"tf":1.0}},"df":6,"+":{"docs":{},"df":0,"4":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"7":{"tf":1.7320508075688772}},"df":3}}},"/":{"docs":{},"df":0,"2":{"docs":{"3":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"4":{"docs":{"15":{"tf":1.0},"24":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{"18":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"5":{"docs":{"19":{"tf":1.0}},"df":1,"0":{"docs":{"21":{"tf":1.0}},"df":1,"0":{"docs":{"19":{"tf":1.0}},"df":1}}},"6":{"docs":{},"df":0,"4":{"docs":{"17":{"tf":1.0}},"df":1}},"8":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"5":{"tf":1.0}},"df":5},"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}},"k":{"docs":{"5":{"tf":1.0}},"df":1},"s":{"docs":{"10":{"tf":1.0}},"df":1},"{":{"docs":{},"df":0,"|":{"docs":{},"df":0,"b":{"docs":{"15":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"+":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}},"0":{"docs":{"18":{"tf":1.0}},"df":1},"_":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":3}},"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"q":{"docs":{"18":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}}},"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"2":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"5":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"5":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0}},"df":4}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"18":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"(":{"docs":{"14":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}},"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}},"|":{"docs":{},"df":0,"^":{"docs":{"10":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"b":{"docs":{"15":{"tf":1.4142135623730951},"5":{"tf":2.0},"6":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1,"·":{"docs":{},"df":0,"|":{"docs":{},"df":0,"a":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"4":{"tf":1.0}},"df":1}},"d":{"docs":{"24":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"5":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"13":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.7320508075688772},"21":{"tf":1.0}},"df":2}}}},"t":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.7320508075688772},"17":{"tf":1.0},"21":{"tf":2.6457513110645907},"8":{"tf":2.23606797749979}},"df":8,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}}}}}},"x":{"docs":{"5":{"tf":2.23606797749979}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0}},"df":4}}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1},"t":{"docs":{"12":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951}},"df":2}}},"|":{"docs":{},"df":0,"^":{"docs":{"10":{"tf":1.0},"9":{"tf":1.0}},"df":2},"−":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"−":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"c":{"docs":{"21":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"22":{"tf":1.7320508075688772}},"df":2,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{"17":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}}},"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"24":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":11,"i":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":8}}}}}},"f":{"docs":{"0":{"tf":1.0}},"df":1},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"10":{"tf":2.0},"12":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":10,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{"0":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"14":{"tf":1.7320508075688772},"21":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"24":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}},"e":{"docs":{"13":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":8}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"0":{"tf":1.7320508075688772},"18":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":3}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":5}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"23":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951}},"df":4}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772},"18":{"tf":1.4142135623730951},"2":{"tf":2.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":6}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}},"s":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"t":{"docs":{"1":{"tf":1.0}},"df":1}},"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"5":{"tf":2.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":5}}}}},"′":{"docs":{},"df":0,"·":{"docs":{},"df":0,"g":{"docs":{"16":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"5":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"8":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"9":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"o":{"docs":{"22":{"tf":1.7320508075688772}},"df":1}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":12}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"8":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":4}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"13":{"tf":1.7320508075688772},"19":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":5,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.449489742783178},"13":{"tf":2.8284271247461903},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":2.449489742783178},"6":{"tf":1.0}},"df":11,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{"12":{"tf":1.7320508075688772},"15":{"tf":1.0},"21":{"tf":2.6457513110645907}},"df":3,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"8":{"tf":2.0},"9":{"tf":1.0}},"df":7,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}},"k":{"docs":{"5":{"tf":1.4142135623730951}},"df":1},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"w":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}},"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.7320508075688772},"21":{"tf":1.0}},"df":4,"^":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3}}},"{":{"docs":{},"df":0,"f":{"docs":{},"df":0,",":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0}},"df":3}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5}}},"d":{"docs":{},"df":0,"g":{"docs":{"5":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}},"df":2}}}},"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.4142135623730951}},"df":1,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":4}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951}},"df":2}}}}},"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":4,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"z":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":8,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"24":{"tf":1.4142135623730951}},"df":2}},"p":{"docs":{"1":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":2.449489742783178}},"df":1,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"z":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}},"s":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":6}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0}},"df":4},"s":{"docs":{"17":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}}}}}}},"f":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":3,"(":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}},"6":{"docs":{},"df":0,"4":{"docs":{"14":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.0}},"df":3}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":2.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":10},"y":{"docs":{},"df":0,"’":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.7320508075688772}},"df":3,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.4142135623730951}},"df":1,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.0},"14":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"x":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"df":5}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0},"24":{"tf":1.0}},"df":2}}},"n":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"5":{"tf":1.0}},"df":4},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"2":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0},"14":{"tf":1.7320508075688772},"21":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"df":4}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"g":{"docs":{"13":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}},"p":{"docs":{"12":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":4,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.0},"5":{"tf":1.7320508075688772},"6":{"tf":1.0},"7":{"tf":1.0}},"df":5}}}}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"16":{"tf":1.0}},"df":1,"t":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}},"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}},"c":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":1.7320508075688772},"21":{"tf":2.23606797749979},"22":{"tf":1.0}},"df":7,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}},"{":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"j":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{"12":{"tf":1.4142135623730951}},"df":1},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}},"i":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"8":{"docs":{"6":{"tf":1.0}},"df":1}}},"^":{"docs":{},"df":0,"j":{"docs":{"5":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":2}}}},"m":{"docs":{"0":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"z":{"docs":{"3":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":3}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":5}}}}}},"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"18":{"tf":1.4142135623730951},"24":{"tf":1.0},"3":{"tf":1.7320508075688772}},"df":4}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.7320508075688772},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"6":{"tf":1.0}},"df":5,"r":{"docs":{"15":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":8}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772}},"df":1}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"j":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2,"|":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"|":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}},"k":{"docs":{"23":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"l":{"docs":{"0":{"tf":1.0},"13":{"tf":2.0},"14":{"tf":1.0},"15":{"tf":1.7320508075688772},"21":{"tf":1.4142135623730951}},"df":5,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"16":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"n":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":8}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"df":2}}},"v":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"o":{"docs":{"12":{"tf":1.0}},"df":1,"g":{"docs":{"12":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":4,"(":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.0}},"df":1},"γ":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"14":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"21":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":5,"/":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"e":{"docs":{},"df":0,"4":{"docs":{"14":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"h":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":2.0},"21":{"tf":2.0}},"df":3,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"5":{"tf":1.0}},"df":4}},"k":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"p":{"docs":{"0":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"u":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{"16":{"tf":1.0},"2":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"x":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":8}},"n":{"docs":{"10":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"20":{"tf":1.0}},"df":3}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}},"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":4,"t":{"docs":{},"df":0,"o":{"docs":{"5":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":2.0}},"df":4}}},"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":5}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"5":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0}},"df":4,"s":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}}}},"p":{"docs":{"18":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1}},")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"q":{"docs":{"18":{"tf":1.0}},"df":1}}}},"_":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.7320508075688772}},"df":1}},"n":{"docs":{"2":{"tf":1.4142135623730951}},"df":1,"/":{"docs":{},"df":0,"q":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":4}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"’":{"docs":{"8":{"tf":1.0}},"df":1}}}},"s":{"docs":{"0":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"t":{"docs":{"10":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0},"3":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"9":{"tf":1.0}},"df":7}},"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":8}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":5,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"7":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"p":{"docs":{},"df":0,"2":{"docs":{},"df":0,"1":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":4,"(":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.7320508075688772}},"df":1}},"n":{"docs":{"18":{"tf":1.0},"2":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951}},"df":3}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{"15":{"tf":1.0}},"df":1,"+":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951}},"df":5,"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":6}}}}},"e":{"docs":{"0":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"2":{"tf":1.7320508075688772}},"df":2}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"6":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"3":{"tf":1.0}},"df":3}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"5":{"tf":2.23606797749979}},"df":2}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}},"df":7}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"3":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":2.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0}},"df":6}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"3":{"tf":1.0},"7":{"tf":1.0}},"df":3,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{"20":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"s":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"21":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4,"(":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":2.0},"6":{"tf":1.7320508075688772}},"df":2}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0},"19":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":3}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"n":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"16":{"tf":1.7320508075688772},"21":{"tf":1.4142135623730951}},"df":3,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951}},"df":4}},"g":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":6}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}},"v":{"docs":{"14":{"tf":1.0}},"df":1}},"t":{"docs":{"0":{"tf":1.0},"13":{"tf":2.0},"14":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":6}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.7320508075688772},"5":{"tf":1.0}},"df":2,",":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,",":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"x":{"docs":{"17":{"tf":1.0}},"df":1}},"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"14":{"tf":1.0},"7":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":4}},"n":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{"7":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0}},"df":2},"r":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"24":{"tf":1.0}},"df":1}}}},"h":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"24":{"tf":1.0}},"df":3}},"m":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"9":{"tf":1.0}},"df":4},"p":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"5":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0}},"df":1}},"^":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0}},"df":3,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}},"x":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}},"e":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"23":{"tf":1.0}},"df":1}}}},"l":{"docs":{"22":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":6,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"8":{"tf":1.0}},"df":2,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{"5":{"tf":1.7320508075688772}},"df":1}}},"p":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.7320508075688772}},"df":3,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":2.0},"15":{"tf":1.7320508075688772},"17":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":5,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}},"df":4}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2}},"u":{"docs":{"17":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0},"24":{"tf":1.0}},"df":2,"i":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":2.23606797749979},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5},"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{"0":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"13":{"tf":1.0}},"df":1}}}},"t":{"docs":{"7":{"tf":1.0}},"df":1,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}}}}},"z":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":5}}},"title":{"root":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0}},"df":3}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"24":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}}},"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"22":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}},"m":{"docs":{"21":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1},"s":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}},"q":{"docs":{"2":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"hcf is a library and CLI for Hurwitz continued fractions (HCF) over\\nthe Gaussian integers ℤ[i]. The expansion of a complex number z iterates\\nthe shift map T(z) = 1/z - [1/z] where [w] rounds both coordinates of w to the nearest Gaussian integer\\n(ties round up). Every orbit point lives in the fundamental domain\\n𝔉 = {−1/2 ≤ Re z, Im z < 1/2}, and each step extracts a digit a_n = [1/T^(n-1) z] with |a_n| ≥ √2. The crate has four layers: Exact arithmetic ( gauss, bigc): Gaussian integers and rationals\\nwith BigInt components, and a dyadic fixed-point complex type that\\ntracks a certified error radius for irrational inputs. Expansions ( cf, parse): digit extraction, the Q-pair recurrence\\nfor convergents p_n/q_n, finite evaluation, and complex-literal\\nparsing. Cylinder geometry ( geometry): the exact transition system on the\\nthirteen feasible regions a cylinder image can assume, plus the\\nseparation constants derived from the fixed point\\nξ = [3+4i; 3+4i, …]. Dimension certificates ( jarnik, families): finite-depth\\nverification of covering-sum and separation conditions for\\ndigit-restricted sets such as E_L (all digits |a| ≥ L), E_L^M\\n(digits in an annulus), and E_{f,g} (sup-norm digit schedules). A certificate produced by this crate is a statement about what was checked at finite depth, never a claim about limits: the asymptotic\\nhypotheses of the underlying covering argument are reported as\\nfinite-depth evidence alongside the exactly verified per-node conditions. All randomized components take explicit seeds and all reports serialize\\ndeterministically, so every run is reproducible byte for byte.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"A Gaussian rational has a terminating expansion, computed entirely in\\nexact arithmetic: #![allow(unused)] fn main() {\\nuse hcf::cf::expand_exact;\\nuse hcf::parse::parse_complex; let z = parse_complex(\\"(3-4i)/(25)\\").unwrap().value;\\nlet exp = expand_exact(&z, 10);\\nassert_eq!(exp.digits.len(), 1);\\nassert_eq!(exp.digits[0].to_string(), \\"3+4i\\");\\nassert!(exp.terminated); } terminated distinguishes an orbit that genuinely reached 0 from one cut\\noff by the depth limit.","breadcrumbs":"Expansions and convergents » Expansions and convergents","id":"1","title":"Expansions and convergents"},"10":{"body":"The upper check reverses the inequality, Σ |B|^s ≤ |A|^s, with\\nchildren at their upper bounds. Families with infinitely many descendants\\nper node must supply a certified tail bound for the part omitted from\\nenumeration; without one the check refuses with TailBoundMissing. The\\nstage covering sums Λ_s must additionally be non-increasing.","breadcrumbs":"Dimension certificates » Upper check","id":"10","title":"Upper check"},"11":{"body":"Stages larger than CheckOptions::node_budget (default 100 000) are not\\nenumerated. Instead the family may supply uniform per-node ratio and\\nseparation bounds valid at every node; the certificate then records those\\ndepths as covered by the uniform bound rather than exact enumeration.","breadcrumbs":"Dimension certificates » Oversized stages","id":"11","title":"Oversized stages"},"12":{"body":"critical_exponent brackets the transition point between the two checks: #![allow(unused)] fn main() {\\nuse hcf::jarnik::{critical_exponent, CantorFamily, CheckOptions}; let (lo, hi) = critical_exponent(&CantorFamily, 8, 1e-3, &CheckOptions::default()).unwrap();\\nlet dim = 2f64.ln() / 3f64.ln();\\nassert!(lo <= dim && dim <= hi); } The middle-third Cantor family is the built-in oracle: its dimension log 2 / log 3 = 0.63092… is known in closed form, so the engine can be\\nvalidated end to end. When diameter slack leaves a gap where neither\\ncheck certifies, bisection stops at the last certified endpoints; if no\\nexponent passes either check, it reports NoBracket instead of guessing.","breadcrumbs":"Dimension certificates » Bisection","id":"12","title":"Bisection"},"13":{"body":"families builds the digit-restricted HCF sets as certificate trees. A\\nnode is a digit string with its Q-pair; diameters come from the cylinder\\nsandwich [γ/(2|q_n|²), 1/|q_n|²] (globally scaled by ½ so the root\\ndiameter is at most 1, which leaves every ratio condition unchanged). Three filters are supported: AnnulusConstant { l, m } — digits with l ≤ |a| ≤ m (the sets E_L^M); AnnulusLower { l } — digits with |a| ≥ l (the sets E_L,\\ninfinitely many children per node); SupNormSchedule { f, g, c_prime } — depth-dependent sup-norm window f(n) ≤ ‖a_n‖ ≤ g(n) (the sets E_{f,g}). Every filter must keep all digit moduli at least √8: below that the lower\\ndiameter bound fails and construction refuses with FilterTooWeak.","breadcrumbs":"Digit-restricted families » Digit-restricted families","id":"13","title":"Digit-restricted families"},"14":{"body":"For E_L^M the per-node descendant-sum ratio admits a closed form, and\\nsetting it to 1 solves for the certified exponent: #![allow(unused)] fn main() {\\nuse hcf::families::lower_exponent_closed_form;\\nuse hcf::geometry::derive_constants; let gamma = derive_constants(128).gamma;\\nlet s = lower_exponent_closed_form(1e4, gamma);\\nassert!(s > 0.9 && s < 1.0); } s(M) = 2 log M / (2 log M + 2 log(1 + 1/M) − log(γ/2)) s(M) increases strictly in M and tends to 1 — the finite-depth\\ncertificates verify concrete (L, M, depth) instances of this trend.\\nThe same formula evaluated in 256-bit fixed point\\n( lower_exponent_closed_form_hp) serves as an independent cross-check of\\nthe f64 path.","breadcrumbs":"Digit-restricted families » Closed-form lower bound","id":"14","title":"Closed-form lower bound"},"15":{"body":"The upper check for E_L needs the tail Σ_{|b| ≥ l} (|b|−1)^{−2s},\\nwhich lattice_tail_bound bounds analytically from the annulus count #{b : r ≤ |b| < r+1} ≤ 2π(r+1) + 4 and integral comparison; every step\\nof the derivation is logged in the returned report. upper_exponent_threshold(ε, γ) then finds the least integer L whose\\nper-node ratio at s = 1 + ε drops to 1, certifying dim ≤ 1 + ε for all larger L.","breadcrumbs":"Digit-restricted families » Upper bound for E_L","id":"15","title":"Upper bound for E_L"},"16":{"body":"For E_{f,g} with f ≤ c′·g, schedule_condition evaluates the growth\\ncondition ratio at each depth and schedule_threshold reports the first N from which it holds onward. The ratio is monotone and approaches 1\\nlogarithmically, mirroring the fact that slowly growing digit schedules\\ngive limit sets of full dimension.","breadcrumbs":"Digit-restricted families » Schedules","id":"16","title":"Schedules"},"17":{"body":"The hcf binary exposes the library over six subcommands. Global flags: --format json|text|csv (text mirrors the JSON fields; CSV where a table\\nmakes sense), --precision <bits> (≥ 64) for approximate orbits and\\nconstants, and --threads as a worker cap (the current engines are\\nsequential; values ≥ 1 are accepted as an upper bound). All output is deterministic: two runs with identical arguments and seeds\\nproduce byte-identical bytes.","breadcrumbs":"Command-line interface » Command-line interface","id":"17","title":"Command-line interface"},"18":{"body":"$ hcf expand \\"(3-4i)/(25)\\"\\n$ hcf expand \\"0.41421356-0.27182818i\\" --depth 12\\n$ hcf expand \\"1/3+2/7i\\" --format text Accepts integer, decimal, and quotient complex literals ( a+bi, (p)/(q), component fractions). Rational inputs expand exactly; decimal\\ninputs run the certified fixed-point orbit at --precision bits. The\\nJSON report carries a0, digits, convergents (each with p, q, abs_q), terminated, and a quality array with the exact\\napproximation error of each convergent scaled by |q_n|².","breadcrumbs":"Command-line interface » expand","id":"18","title":"expand"},"19":{"body":"$ hcf verify prop21 --samples 10000\\n$ hcf verify sandwich --samples 500 --depth 12 --seed 5\\n$ hcf verify transitions --samples 1000 --seed 3 Seeded randomized suites: expansion invariants in exact arithmetic, the\\ndiameter sandwich against the derived γ, and the exact transition\\ngeometry against the independent integer sampling oracle. A failing suite\\nprints its report and exits 1.","breadcrumbs":"Command-line interface » verify","id":"19","title":"verify"},"2":{"body":"The numerators and denominators of the convergents follow the standard\\n2×2 recurrence seeded with the identity matrix: p_n = a_n p_(n-1) + p_(n-2) q_n = a_n q_(n-1) + q_(n-2) HcfExpansion stores the seeds explicitly, so p(n) and q(n) accept n = -1 and n = 0. Three structural facts hold along every expansion\\nand are enforced by the test suite in exact arithmetic: Unimodularity: |p_n q_(n-1) - p_(n-1) q_n| = 1. Strict growth: |q_n| strictly increases. Approximation quality: |z - p_n/q_n| ≤ 1/|q_n|².","breadcrumbs":"Expansions and convergents » Convergents and the Q-pair recurrence","id":"2","title":"Convergents and the Q-pair recurrence"},"20":{"body":"Dumps the full transition table: all thirteen feasible shapes crossed\\nwith every digit of norm ≤ 8, including empty and degenerate-empty\\ntransitions. --format csv emits shape,digit,image rows.","breadcrumbs":"Command-line interface » shapes","id":"20","title":"shapes"},"21":{"body":"$ hcf dim-bounds --l 3 --m 50 --depth 3 # closed form + lower certificate\\n$ hcf dim-bounds --l 3 --m 12 --depth 2 --bracket # also bisect the exponent\\n$ hcf dim-bounds --scan-m --format csv # s(M) over M = 10..10^6\\n$ hcf dim-bounds --epsilon 0.5 # E_L upper threshold at s = 1.5\\n$ hcf dim-bounds --schedule --s 0.9 --c-prime 0.1 # schedule condition scan","breadcrumbs":"Command-line interface » dim-bounds","id":"21","title":"dim-bounds"},"22":{"body":"$ hcf cantor-demo --depth 8 --tol 0.001 Brackets log 2 / log 3 with the certificate engine and prints the\\nlower/upper certificates at 0.62 and 0.64 — the standing oracle for the\\nengine itself.","breadcrumbs":"Command-line interface » cantor-demo","id":"22","title":"cantor-demo"},"23":{"body":"Prints ξ, |ξ|, γ, and the separation constant k, together with the\\ndisagreement between the two independent ξ solvers.","breadcrumbs":"Command-line interface » constants","id":"23","title":"constants"},"24":{"body":"code meaning 0 success 1 a verification suite or certificate check failed 2 invalid input (parse error, bad flag value) 3 precision exhausted before the requested depth 4 no bracketing pair of exponents","breadcrumbs":"Command-line interface » Exit codes","id":"24","title":"Exit codes"},"3":{"body":"For inputs that are not Gaussian rationals the orbit runs in dyadic fixed\\npoint ( BigComplex) with a certified error radius carried through every\\nreciprocal. A digit is only emitted when the rounding is unambiguous at\\nthe current precision; otherwise the expansion stops with AmbiguousRounding or PrecisionExhausted rather than guessing. Ties\\nare genuine: for instance an orbit can land exactly on Im(1/z) = 3/2,\\nwhich the exact path resolves by the half-up convention but a certified\\napproximate path must refuse.","breadcrumbs":"Expansions and convergents » Irrational inputs","id":"3","title":"Irrational inputs"},"4":{"body":"evaluate folds a digit string back into a rational, optionally around a\\nrational tail; the roundtrip evaluate(expand(z)) agrees with z to\\nwithin 2/|q_n|², again checked exactly.","breadcrumbs":"Expansions and convergents » Evaluation","id":"4","title":"Evaluation"},"5":{"body":"The cylinder C_n(a) is the set of points whose first n digits equal\\nthe string a. Its image under T^n — the feasible region of the next\\ndigit — is, up to boundary, always one of thirteen shapes: rotations i^j 𝔉_k of four base regions, where each base region is the unit box\\nminus up to two closed unit disks centered at specific Gaussian units. Appending a digit b maps a feasible region F through w ↦ 1/w − b.\\nThe crate computes this transition exactly over the rationals: #![allow(unused)] fn main() {\\nuse hcf::geometry::{digit_transition, FeasibleShape, Transition};\\nuse hcf::gauss::GaussianInt; let t = digit_transition(FeasibleShape::FULL, &GaussianInt::new(-2, 0)).unwrap();\\nassert_eq!(t, Transition::Shape(FeasibleShape::new(2, 2))); // box minus D(1) } The computation inverts each boundary circle of F, translates by −b,\\ndiscards excluded disks that become redundant inside the box, and\\nclassifies the result against the catalogue. Anything outside the\\ncatalogue is a hard UnclassifiableShape error — it never silently\\napproximates. Two degenerate outcomes are possible and tracked precisely: a transition\\ncan be empty, or empty up to a one-dimensional segment on a box edge\\n( Transition::Empty { degenerate: true }). Digits with |b| ≥ √8 always map any feasible region onto the full box,\\nwhich is why digit-restricted families built from such digits have no\\nadmissibility constraints.","breadcrumbs":"Cylinder geometry » Cylinder geometry","id":"5","title":"Cylinder geometry"},"6":{"body":"The exact transitions are cross-checked by a deliberately independent\\noracle ( verify::run_transitions): sample points are dyadic with\\ndenominator 2^16, so domain membership, digit extraction, image\\nmembership, and the reverse preimage check all reduce to i128 integer\\ncomparisons with no shared code path. The oracle checks both directions —\\na claimed image that is too small is caught forward, one that is too\\nlarge is caught by inverting z = 1/(w + b) — and skips exact boundary\\ncontacts.","breadcrumbs":"Cylinder geometry » The sampling oracle","id":"6","title":"The sampling oracle"},"7":{"body":"The distance between points in distinct cylinders is controlled by γ = 2|ξ|/(1+|ξ|)², where ξ = [3+4i; 3+4i, …] solves ξ² − (3+4i)ξ − 1 = 0. derive_constants computes ξ with two\\nindependent solvers (fixed-point iteration and the quadratic formula)\\nand requires agreement below 10⁻³⁰; γ is rounded down so every\\ndownstream inequality stays conservative. The resulting sandwich γ / |q_n|² ≤ witness distance ≤ 2 / |q_n|² is verified on randomized admissible prefixes by verify::run_sandwich.","breadcrumbs":"Cylinder geometry » Separation constants","id":"7","title":"Separation constants"},"8":{"body":"The engine in jarnik bounds the Hausdorff dimension of the limit set of\\na diametrically strongly tree-like family: nested stages of compact\\nsets where each stage- n set carries finitely many descendants, stage\\ndiameters shrink, and distinct descendants are separated. A family implements the TreeFamily trait: nodes, descendants, certified\\ndiameter bounds (lower, upper), and separation data. The checkers always\\ncombine bounds in the conservative direction — children at their lower\\ndiameter bound against the parent’s upper bound for the lower check, and\\nthe reverse for the upper check.","breadcrumbs":"Dimension certificates » Dimension certificates","id":"8","title":"Dimension certificates"},"9":{"body":"check_lower_conditions(family, s, depth, from_depth, opts) verifies at\\nevery node of the checked depths: Descendant sum: Σ_children |B|^s ≥ |A|^s. Separation: distinct descendants of A are at least B_n·|A|\\napart, where B_n is the family’s stage separation coefficient. A passing run yields a DimensionCertificate with the worst margin per\\ncondition; the first violated node yields a CheckFailure naming the\\nnode, the condition, and the offending value. The two asymptotic\\nhypotheses of the covering argument (stage-diameter decay, separation\\ngrowth) are reported as finite-depth evidence — the certificate never\\nasserts a limit.","breadcrumbs":"Dimension certificates » Lower check","id":"9","title":"Lower check"}},"docInfo":{"0":{"body":173,"breadcrumbs":2,"title":1},"1":{"body":36,"breadcrumbs":4,"title":2},"10":{"body":34,"breadcrumbs":4,"title":2},"11":{"body":27,"breadcrumbs":4,"title":2},"12":{"body":65,"breadcrumbs":3,"title":1},"13":{"body":77,"breadcrumbs":6,"title":3},"14":{"body":71,"breadcrumbs":7,"title":4},"15":{"body":43,"breadcrumbs":6,"title":3},"16":{"body":32,"breadcrumbs":4,"title":1},"17":{"body":47,"breadcrumbs":6,"title":3},"18":{"body":58,"breadcrumbs":4,"title":1},"19":{"body":46,"breadcrumbs":4,"title":1},"2":{"body":62,"breadcrumbs":6,"title":4},"20":{"body":21,"breadcrumbs":4,"title":1},"21":{"body":58,"breadcrumbs":5,"title":2},"22":{"body":23,"breadcrumbs":5,"title":2},"23":{"body":10,"breadcrumbs":4,"title":1},"24":{"body":28,"breadcrumbs":5,"title":2},"3":{"body":45,"breadcrumbs":4,"title":2},"4":{"body":19,"breadcrumbs":3,"title":1},"5":{"body":145,"breadcrumbs":4,"title":2},"6":{"body":49,"breadcrumbs":4,"title":2},"7":{"body":45,"breadcrumbs":4,"title":2},"8":{"body":61,"breadcrumbs":4,"title":2},"9":{"body":60,"breadcrumbs":4,"title":2}},"length":25},"lang":"English"}}'));