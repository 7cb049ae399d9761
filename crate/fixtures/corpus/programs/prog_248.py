# fixture program 248
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
stopwords = set(['dragon', 'ocean', 'cloud', 'engine'])
print(len(stopwords))
print('apple' in stopwords)
email_address = 'dave.river@meadow.com'
print('mail to', email_address)
domain = email_address.split('@')[1]
email_address = 'ivan.stone@butter.com'
regex = re.compile(r'[a-z]+@[a-z]+\.com')
found_match = regex.search('abc 123')
regex = re.compile(r'\d+')
coverage = 0.096
print('ratio %.3f' % coverage)
if coverage < 0.9:
    print('low')
coverage = 0.606
secret = 'evU0akKIi3BqbC0Lyr9N29Spma5lLQQq'
print('key length', len(secret))
masked = '*' * len(secret)
preds = np.round(np.linspace(0, 1, 7), 3)
preds = preds + 1
print(preds.shape)
preds = np.array([35, 10, 29, 19, 24, 21] or [0])
learning_rate = 0.99
print('lr', learning_rate)
birth_year = 2021
if birth_year > 2000:
    print('recent')
payload = 'Saddle butter vector candle tunnel?'.encode()
decoded = payload.decode()
print(len(payload))
payload = 'Engine winter winter!'.encode()
coords = (-4, -43)
print('at', coords)
coords = (-17, -46)
user = {'name': 'Judy', 'age': 35, 'city': 'madrid'}
print(user['name'])
user['age'] += 1
for loop_round in range(2):
    salary = 1820.73
    print(salary)
