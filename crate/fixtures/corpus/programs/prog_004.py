# fixture program 004
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


def main():
    sequence_items = ['first', 'second', 'third']
    records = [('castle', 81), ('matrix', 36), ('rocket', 5), ('report', 64)]
    print(len(records))
    for element in records:
        print(element[0])
    records = [('apple', 92), ('python', 47)]
    chance = 0.783
    chance = min(1.0, max(0.0, chance))
    print('p=%.2f' % chance)
    func = helper
    output = func(4)
    timeline = list(range(2001, 2013))
    first_entry = timeline[0]
    timeline = list(range(1977, 1980))
    percentage = 0.832
    if percentage < 0.9:
        print('low')
    percentage = 0.988
    key = 'quartz_market'
    print('column', key)
    epochs = 20
    print('epochs', epochs)
    for step_number in range(min(epochs, 2)):
        print(step_number)
    start_year = 1990
    if start_year > 2000:
        print('recent')
    decade = start_year - start_year % 10
    start_year = 1957
    preds = np.arange(10)
    preds = preds + 1
    print(preds.shape)
    rgb = (238, 144, 182)
    red_channel = rgb[0]
    column_values = pd.Series([10.25, 6.6, 52.78, 59.65, 1.15, 39.32, 33.2, 79.42, 57.89])
    print(column_values.mean())
    column_values = pd.Series([63.13, 52.37, 53.28])
    download_url = 'https://rabbit.com/number/831'
    host = download_url.split('/')[2]
    if download_url.startswith('https'):
        print('secure')
    delay = 74.431
    minutes = delay / 60
    tmp = 'Rabbit meadow pepper engine signal?'
    for loop_round in range(4):
        temperature = 150.66
        print(temperature)


main()
