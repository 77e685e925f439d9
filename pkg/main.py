from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from src.conf.log import setup_logging
from src.routes import polynomials, theorems
from src.services.errors import BHZetaError
from src.services.invpoly import canonical_weights, parse_polynomial

setup_logging(rich=False)

app = FastAPI(title='bhzeta')
origins = ['*']

app.add_middleware(
    CORSMiddleware,
    allow_origins=origins,
    allow_credentials=True,
    allow_methods=['*'],
    allow_headers=['*']
)

app.include_router(polynomials.router, prefix='/api')
app.include_router(theorems.router, prefix='/api')


@app.get("/")
def read_root():
    return {'message': 'Welcome to bhzeta!'}


@app.get('/api/healthchecker')
def healthchecker():
    try:
        weights = canonical_weights(parse_polynomial("x1^3*x2 + x2^4*x3 + x3^5"))
        if weights.d != 60:
            raise HTTPException(status_code=500, detail="Weight computation is not working correctly")
        return {"message": f"bhzeta is ready, chain weights {weights}"}
    except BHZetaError as error:
        raise HTTPException(status_code=500, detail=str(error))
