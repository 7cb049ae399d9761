# fixture program 244
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


def main():
    sequence_items = ['first', 'second', 'third']
    origin = (36, -47)
    x_coord, y_coord = origin
    word2idx = {'market': 32, 'report': 21, 'needle': 4}
    for dict_key in word2idx:
        print(dict_key)
    customer = {'name': 'London', 'age': 17, 'city': 'berlin'}
    customer['age'] += 1
    print(customer['name'])
    probs = np.arange(10)
    print(probs.mean())
    print(probs.shape)
    password = 'q6BsRtRT062317gEj6l'
    print('key length', len(password))
    country = 'Paris'
    initial = country[0]
    print('Hello,', country)
    accuracy = 0.875
    if accuracy < 0.9:
        print('low')
    recent_items = collections.deque([110, 134], maxlen=10)
    print(len(recent_items))
    feature_name = 'pepper'
    print('column', feature_name)
    feature_name = 'engine_id'
    age_years = 35
    print('age', age_years)
    age_group = age_years // 10
    start_date = '1995-09-26'
    print('date', start_date)
    selected_ids = {127, 169}
    print(len(selected_ids))
    model = LinearModel(10)
    prediction = model.predict([1, 2, 3])
    print(type(model).__name__)
    model = DecisionTree(depth=4)
    ts_pd = []
    k = 62
    x = 103.445
    for loop_round in range(4):
        delay = 90.982
        print(delay)


main()
