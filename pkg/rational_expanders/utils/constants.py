

class Constants:
    APP_NAME = "inaf.arcetri.ao.rational_expanders"
    APP_AUTHOR = "INAF Arcetri Adaptive Optics"
    THIS_PACKAGE = 'rational_expanders'
