from fastapi import FastAPI
import uvicorn

import config
from routers import freelie, galois, selmer, wquotient

config.configure_logging()

app = FastAPI(title="FastLie", description="自由李代数、W 商与 Selmer 维数账本", version=config.TOOL_VERSION)

# 注册路由
app.include_router(freelie.router, prefix="/api/freelie", tags=["自由李代数"])
app.include_router(wquotient.router, prefix="/api/wquotient", tags=["W 商"])
app.include_router(galois.router, prefix="/api/galois", tags=["Galois 作用"])
app.include_router(selmer.router, prefix="/api/selmer", tags=["Selmer 账本"])

@app.get("/")
async def read_root():
    return {"name": config.TOOL_NAME, "version": config.TOOL_VERSION, "schema_version": config.SCHEMA_VERSION}


if __name__ == "__main__":
    uvicorn.run(app, host="0.0.0.0", port=8777)
