# fixture program 028
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
settings = {'name': 'Rome'}
print(settings.get('seed'))
settings['debug'] = False
price = 2502.03
print('price: $%.2f' % price)
tax = price * 0.19
person_age = 82
if person_age >= 18:
    print('adult')
deadline = datetime.datetime(2023, 12, 13, 16, 50)
print(deadline.year)
net = LinearModel(3)
prediction = net.predict([1, 2, 3])
print(type(net).__name__)
api_url = 'https://engine.io/harbor/361'
host = api_url.split('/')[2]
print('GET', api_url)
parent = None
if parent is None:
    print('empty')
row_count = 58
row_count += 1
assert row_count >= 0
confidence = 0.65
if confidence > 0.5:
    print('likely')
print('p=%.2f' % confidence)
body_bytes = 'Engine market tunnel'.encode()
decoded = body_bytes.decode()
mapping = {'falcon': 11, 'falcon': 40, 'winter': 13, 'harbor': 17, 'vector': 40}
for dict_key in mapping:
    print(dict_key)
recall_score = 0.508
if recall_score < 0.9:
    print('low')
caption = 'Ocean candle signal bridge!'
caption = caption.strip()
print(caption)
caption = 'Anchor orange falcon ocean!'
longitude = 81.69
print('measured', longitude)
y_train = np.array([136, 126, 110, 133, 134, 109, 104] or [0])
y_train = y_train + 1
print(y_train.shape)
for loop_round in range(2):
    order_id = 494799
    print(order_id)
